import pytest

import nunivpy as nv


@pytest.fixture
def abc():
    return nv.Alphabet("abc")


def test_arch_factorize(abc):
    fwd = nv.arch_factorize(abc, "accbbacab")
    assert fwd.arches == ["accb", "bac"]
    assert fwd.iota == 2
    assert fwd.modus == "bc"
    assert fwd.rest == "ab"


def test_scattered_factors(abc):
    assert nv.is_scattered_factor(abc, "bcc", "aabcbccab")
    assert not nv.is_scattered_factor(abc, "bcc", "accbbacab")
    assert nv.absent_factors(abc, "acbba", 2) == ["bc", "cc"]
    assert nv.deficiency(abc, "acbba", 2) == 2


def test_check_nearly(abc):
    witness = nv.check_nearly(abc, "accbbacab", 3)
    assert witness.is_nearly
    assert witness.absent == "bcc"
    assert len(witness.splits) == 1
    assert not nv.check_nearly(abc, "acbba", 2).is_nearly
    assert nv.absent_factor_nearly(abc, "accbbacab", 3) == "bcc"


def test_construct(abc):
    assert nv.construct_w_u(abc, "abccab") == "bcbaaccbabcabacbcbaac"
    assert nv.construct_w_u(abc, "abbc") == "bcbaacbaccbab"
    with pytest.raises(ValueError):
        nv.construct_w_u(abc, "abz")


def test_basis_and_membership(abc):
    basis = nv.basis_of(abc, "abbc")
    assert basis.count == 16
    assert len(basis.elements) == 16
    assert all(nv.class_membership(abc, w, "abbc", 4) for w in basis.elements)
    assert nv.class_membership(abc, "accbbacab", "bcc", 3, nv.MembershipMethod.basis_pump)
    assert nv.in_pump_set(abc, "acacbbacab", "accbbacab", 3)


def test_structured(abc):
    fact = nv.alpha_beta_factorize(abc, "aabcbccab", 3)
    assert fact.alphas == ["a", "bc", "b"]
    assert fact.betas == ["abc", "ca"]
    witnesses = nv.absent_factors_structured(abc, "aabcbccab", 3)
    assert [w.u for w in witnesses] == ["baa", "bac", "caa", "cac"]
    assert nv.deficiency_structured(abc, "aabcbccab", 3) == 4
    assert not nv.congruent_structured(abc, "aabcbccab", "aabcbcab", 3)
    assert not nv.simon_congruent(abc, "aabcbccab", "aabcbcab", 3)


def test_extremes_and_census(abc):
    ab = nv.Alphabet("ab")
    assert nv.classify_extreme(ab, "aabb", 3)["tag"] == "two-present"
    report = nv.census(ab, 1, 2, 7)
    assert report["class_count"] == 4
    assert report["stabilized"]
    assert report["formula_comparison"]["match"]


def test_capacity_error(abc):
    with pytest.raises(nv.CapacityError):
        nv.scatfact_set(abc, "abc", 40)
    assert len(nv.claim_ids()) == 23
