#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nuniv/nearly.hpp"

using namespace nuniv;

TEST_CASE("check_nearly on the reference words") {
  Alphabet abc("abc"), ab("ab");

  NearlyWitness w1 = check_nearly(abc, "accbbacab", 3);
  CHECK(w1.is_nearly);
  CHECK(w1.absent == "bcc");

  CHECK_FALSE(check_nearly(abc, "acbba", 2).is_nearly);

  // Even k needs both splits; the single odd-style split would accept this.
  CHECK_FALSE(check_nearly(ab, "aabbaaba", 4).is_nearly);

  NearlyWitness w4 = check_nearly(ab, "abaabb", 3);
  CHECK(w4.is_nearly);
  CHECK(w4.absent == "bba");
}

TEST_CASE("check_nearly records the splits it used") {
  Alphabet ab("ab");
  NearlyWitness odd = check_nearly(ab, "abaabb", 3);
  REQUIRE(odd.splits.size() == 1);
  CHECK(odd.splits[0].k_hat + odd.splits[0].k_tilde + 1 == 3);
  CHECK(odd.splits[0].ok);
  NearlyWitness even = check_nearly(ab, "aabbaaba", 4);
  CHECK(even.splits.size() >= 1);
}

TEST_CASE("absent_factor_nearly") {
  Alphabet abc("abc"), ab("ab");
  CHECK(absent_factor_nearly(abc, "accbbacab", 3) == "bcc");
  CHECK(absent_factor_nearly(ab, "abaabb", 3) == "bba");
  CHECK_THROWS_AS(absent_factor_nearly(ab, "ab", 1), std::logic_error);
}

TEST_CASE("construct_w_u reference words") {
  Alphabet abc("abc"), ab("ab");
  CHECK(construct_w_u(abc, "abccab") == "bcbaaccbabcabacbcbaac");
  CHECK(construct_w_u(abc, "abbc") == "bcbaacbaccbab");
  std::string unary = construct_w_u(ab, "aaa");
  CHECK(unary.size() == 5);
  CHECK(absent_factors_brute(ab, unary, 3) == std::vector<std::string>{"aaa"});
  CHECK_THROWS_AS(construct_w_u(ab, "abc"), std::invalid_argument);
  CHECK_THROWS_AS(construct_w_u(ab, ""), std::invalid_argument);
}

TEST_CASE("construct_w_u sweep: sole absent factor, minimal length") {
  Alphabet ab("ab"), abc("abc");
  for (const Alphabet& alphabet : {ab, abc}) {
    for (int k = 1; k <= 3; ++k) {
      std::string all;
      for (int i = 0; i < k; ++i) all += alphabet.letters();
      for (const std::string& u : scatfact_set(alphabet, all, k)) {
        std::string w = construct_w_u(alphabet, u);
        CHECK(w.size() ==
              static_cast<std::size_t>(k * alphabet.sigma()) + condense(u).size() - 2);
        CHECK(absent_factors_brute(alphabet, w, k) == std::vector<std::string>{u});
      }
    }
  }
}

TEST_CASE("construct_w_u degenerate alphabet") {
  Alphabet a("a");
  CHECK(construct_w_u(a, "aaa") == "aa");  // length k - 1: everything shorter than k
  CHECK(absent_factors_brute(a, "aa", 3) == std::vector<std::string>{"aaa"});
}

TEST_CASE("basis of abbc") {
  Alphabet abc("abc");
  Basis basis = basis_of(abc, "abbc");
  CHECK(basis.word_u == "bcbaacbaccbab");
  CHECK(basis.count == 16);
  REQUIRE(basis.elements.size() == 16);
  CHECK(std::count(basis.elements.begin(), basis.elements.end(), "bcbaacbaccbab") == 1);
  // All four blocks swapped at once.
  CHECK(std::count(basis.elements.begin(), basis.elements.end(), "cbbacabcacbba") == 1);
  for (const std::string& element : basis.elements) {
    CHECK(element.size() == basis.word_u.size());
    CHECK(absent_factor_nearly(abc, element, 4) == "abbc");
  }
}

TEST_CASE("basis over a binary alphabet is the singleton") {
  Alphabet ab("ab");
  Basis basis = basis_of(ab, "aba");
  CHECK(basis.count == 1);
  CHECK(basis.elements == std::vector<std::string>{basis.word_u});
}

TEST_CASE("basis budget") {
  Alphabet big("abcdefg");
  CHECK_THROWS_AS(basis_of(big, "abcdefg", 100), capacity_error);
}

TEST_CASE("pump set membership") {
  Alphabet abc("abc"), ab("ab");
  CHECK(in_pump_set(abc, "accbbacab", "accbbacab", 3));
  // First arch accb replaced by acacb: interior alphabet kept, acc still inside.
  CHECK(in_pump_set(abc, "acacbbacab", "accbbacab", 3));
  // Deleting an a from the first arch of abaabb loses aa from the interior.
  CHECK_FALSE(in_pump_set(ab, "ababb", "abaabb", 3));
  CHECK_THROWS_AS(in_pump_set(ab, "ab", "ab", 2), std::logic_error);
}

TEST_CASE("class membership, both methods") {
  Alphabet abc("abc");
  for (MembershipMethod method : {MembershipMethod::direct, MembershipMethod::basis_pump}) {
    CHECK(class_membership(abc, construct_w_u(abc, "bca"), "bca", 3, method));
    CHECK(class_membership(abc, "accbbacab", "bcc", 3, method));
    CHECK_FALSE(class_membership(abc, "accbbacab", "ccb", 3, method));
    CHECK_FALSE(class_membership(abc, "acbba", "ab", 2, method));
  }
}

TEST_CASE("unary alphabet nearly check") {
  Alphabet a("a");
  CHECK(check_nearly(a, "aa", 3).is_nearly);
  CHECK(check_nearly(a, "aa", 3).absent == "aaa");
  CHECK_FALSE(check_nearly(a, "aaa", 3).is_nearly);
  CHECK(check_nearly(a, "a", 3).is_nearly);  // sigma^3 = 1: every shorter word misses just aaa
  CHECK(check_nearly(a, "", 3).is_nearly);
}
