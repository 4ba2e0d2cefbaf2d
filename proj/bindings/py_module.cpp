#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nuniv/alpha_beta.hpp"
#include "nuniv/extremes.hpp"
#include "nuniv/nearly.hpp"
#include "nuniv/oracle_lab.hpp"
#include "nuniv/word_core.hpp"

namespace py = pybind11;
using namespace nuniv;

PYBIND11_MODULE(nunivpy, m) {
  m.doc() = "nearly k-universal words: decision, construction, structured absence";

  py::register_exception<capacity_error>(m, "CapacityError");

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::string_view>())
      .def_property_readonly("sigma", &Alphabet::sigma)
      .def_property_readonly("letters", &Alphabet::letters)
      .def("validate", &Alphabet::validate)
      .def("__repr__",
           [](const Alphabet& a) { return "Alphabet('" + a.letters() + "')"; });

  py::enum_<CongruenceMode>(m, "CongruenceMode")
      .value("exact_k", CongruenceMode::exact_k)
      .value("up_to_k", CongruenceMode::up_to_k);

  py::enum_<MembershipMethod>(m, "MembershipMethod")
      .value("direct", MembershipMethod::direct)
      .value("basis_pump", MembershipMethod::basis_pump);

  py::class_<ArchFactorization>(m, "ArchFactorization")
      .def_readonly("arches", &ArchFactorization::arches)
      .def_readonly("boundaries", &ArchFactorization::boundaries)
      .def_readonly("rest", &ArchFactorization::rest)
      .def_readonly("iota", &ArchFactorization::iota)
      .def_readonly("modus", &ArchFactorization::modus);

  py::class_<SplitRecord>(m, "SplitRecord")
      .def_readonly("k_hat", &SplitRecord::k_hat)
      .def_readonly("k_tilde", &SplitRecord::k_tilde)
      .def_readonly("ok", &SplitRecord::ok)
      .def_readonly("x_begin", &SplitRecord::x_begin)
      .def_readonly("x_end", &SplitRecord::x_end)
      .def_readonly("violation", &SplitRecord::violation);

  py::class_<NearlyWitness>(m, "NearlyWitness")
      .def_readonly("is_nearly", &NearlyWitness::is_nearly)
      .def_readonly("absent", &NearlyWitness::absent)
      .def_readonly("reason", &NearlyWitness::reason)
      .def_readonly("splits", &NearlyWitness::splits);

  py::class_<Basis>(m, "Basis")
      .def_readonly("word_u", &Basis::word_u)
      .def_readonly("count", &Basis::count)
      .def_readonly("elements", &Basis::elements);

  py::class_<AbsenceWitness>(m, "AbsenceWitness")
      .def_readonly("u", &AbsenceWitness::u)
      .def_readonly("chain", &AbsenceWitness::chain);

  py::class_<AlphaBetaFactorization>(m, "AlphaBetaFactorization")
      .def_readonly("k", &AlphaBetaFactorization::k)
      .def_readonly("alphas", &AlphaBetaFactorization::alphas)
      .def_readonly("betas", &AlphaBetaFactorization::betas)
      .def_readonly("alpha_bounds", &AlphaBetaFactorization::alpha_bounds)
      .def_readonly("beta_bounds", &AlphaBetaFactorization::beta_bounds);

  m.def("arch_factorize", &arch_factorize, py::arg("alphabet"), py::arg("word"));
  m.def("is_scattered_factor",
        py::overload_cast<const Alphabet&, std::string_view, std::string_view>(
            &is_scattered_factor),
        py::arg("alphabet"), py::arg("factor"), py::arg("word"));
  m.def("scatfact_set", &scatfact_set, py::arg("alphabet"), py::arg("word"), py::arg("k"),
        py::arg("budget") = kDefaultBudget);
  m.def("absent_factors", &absent_factors_brute, py::arg("alphabet"), py::arg("word"),
        py::arg("k"), py::arg("budget") = kDefaultBudget);
  m.def("deficiency", &deficiency, py::arg("alphabet"), py::arg("word"), py::arg("k"));
  m.def("simon_congruent", &simon_congruent, py::arg("alphabet"), py::arg("word1"),
        py::arg("word2"), py::arg("k"), py::arg("mode") = CongruenceMode::exact_k,
        py::arg("budget") = kDefaultBudget);

  m.def("check_nearly", &check_nearly, py::arg("alphabet"), py::arg("word"), py::arg("k"));
  m.def("absent_factor_nearly", &absent_factor_nearly, py::arg("alphabet"), py::arg("word"),
        py::arg("k"));
  m.def("construct_w_u", &construct_w_u, py::arg("alphabet"), py::arg("factor"));
  m.def("basis_of", &basis_of, py::arg("alphabet"), py::arg("factor"),
        py::arg("budget") = kDefaultBudget);
  m.def("in_pump_set", &in_pump_set, py::arg("alphabet"), py::arg("candidate"), py::arg("v"),
        py::arg("k"));
  m.def("class_membership", &class_membership, py::arg("alphabet"), py::arg("word"),
        py::arg("factor"), py::arg("k"), py::arg("method") = MembershipMethod::direct,
        py::arg("budget") = kDefaultBudget);

  m.def("alpha_beta_factorize", &alpha_beta_factorize, py::arg("alphabet"), py::arg("word"),
        py::arg("k"));
  m.def("absent_factors_structured", &absent_factors_structured, py::arg("alphabet"),
        py::arg("word"), py::arg("k"));
  m.def("deficiency_structured", &deficiency_structured, py::arg("alphabet"), py::arg("word"),
        py::arg("k"));
  m.def("congruent_structured", &congruent_structured, py::arg("alphabet"), py::arg("word1"),
        py::arg("word2"), py::arg("k"));

  m.def(
      "classify_extreme",
      [](const Alphabet& alphabet, const std::string& word, int k) {
        ExtremeClassification cls = classify_extreme(alphabet, word, k);
        py::dict out;
        out["tag"] = std::string(to_string(cls.tag));
        if (cls.tag == ExtremeTag::two_present) {
          out["x"] = std::string(1, cls.x);
          out["y"] = std::string(1, cls.y);
          out["p"] = cls.p;
          out["q"] = cls.q;
        }
        return out;
      },
      py::arg("alphabet"), py::arg("word"), py::arg("k"));

  m.def(
      "census",
      [](const Alphabet& alphabet, std::uint64_t m, int k, int max_len, CongruenceMode mode,
         std::uint64_t budget) {
        CensusReport report = census(alphabet, m, k, max_len, mode, budget);
        py::dict out;
        out["class_count"] = report.class_count;
        out["stabilized"] = report.stabilized;
        out["representatives"] = report.representatives;
        if (report.formula_comparison) {
          py::dict f;
          f["claim"] = report.formula_comparison->claim;
          f["claimed"] = report.formula_comparison->claimed;
          f["observed"] = report.formula_comparison->observed;
          f["match"] = report.formula_comparison->match;
          out["formula_comparison"] = f;
        }
        return out;
      },
      py::arg("alphabet"), py::arg("m"), py::arg("k"), py::arg("max_len"),
      py::arg("mode") = CongruenceMode::exact_k, py::arg("budget") = kDefaultBudget);

  m.def("claim_ids", &claim_ids);
}
