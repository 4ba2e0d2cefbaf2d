#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nuniv/alpha_beta.hpp"
#include "nuniv/extremes.hpp"
#include "nuniv/nearly.hpp"
#include "nuniv/oracle_lab.hpp"
#include "nuniv/word_core.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("NUNIV_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return nuniv::kDefaultBudget;
}

struct Common {
  std::string alphabet;
  int k = 0;
  bool json = false;
  std::uint64_t budget = default_budget();
};

void add_common(CLI::App* cmd, Common& common, bool needs_k = true) {
  cmd->add_option("-a,--alphabet", common.alphabet, "ordered alphabet letters")->required();
  if (needs_k) cmd->add_option("-k", common.k, "factor length k")->required();
  cmd->add_flag("--json", common.json, "emit JSON");
  cmd->add_option("--budget", common.budget, "object budget for set-sized operations");
}

nuniv::Alphabet ordered_alphabet(const nuniv::Alphabet& base, const std::string& order) {
  if (order.empty()) return base;
  nuniv::Alphabet reordered(order);
  if (reordered.sigma() != base.sigma() ||
      (reordered.full_mask() != base.alph_mask(order)))
    throw std::invalid_argument("--order must permute the alphabet letters");
  return reordered;
}

int cmd_analyze(const Common& common, const std::string& word) {
  nuniv::Alphabet alphabet(common.alphabet);
  alphabet.validate(word);
  nuniv::ArchFactorization fwd = nuniv::arch_factorize(alphabet, word);
  std::uint64_t m = nuniv::deficiency(alphabet, word, common.k);
  nuniv::ExtremeClassification extreme = nuniv::classify_extreme(alphabet, word, common.k);
  if (common.json) {
    nlohmann::json j;
    j["word"] = word;
    j["k"] = common.k;
    j["arches"] = fwd.arches;
    j["iota"] = fwd.iota;
    j["modus"] = fwd.modus;
    j["rest"] = fwd.rest;
    j["deficiency"] = m;
    j["extreme"] = nuniv::to_string(extreme.tag);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "word: " << word << '\n';
    std::cout << "arches:";
    for (const auto& arch : fwd.arches) std::cout << ' ' << arch;
    std::cout << "\niota: " << fwd.iota << "\nmodus: " << fwd.modus << "\nrest: " << fwd.rest
              << "\ndeficiency at k=" << common.k << ": " << m
              << "\nextreme: " << nuniv::to_string(extreme.tag) << '\n';
  }
  return kExitYes;
}

int cmd_check_nearly(const Common& common, const std::string& word) {
  nuniv::Alphabet alphabet(common.alphabet);
  nuniv::NearlyWitness witness = nuniv::check_nearly(alphabet, word, common.k);
  if (common.json) {
    nlohmann::json j;
    j["is_nearly"] = witness.is_nearly;
    if (witness.absent) j["absent"] = *witness.absent;
    j["reason"] = witness.reason;
    nlohmann::json splits = nlohmann::json::array();
    for (const auto& s : witness.splits)
      splits.push_back({{"k_hat", s.k_hat},
                        {"k_tilde", s.k_tilde},
                        {"ok", s.ok},
                        {"x_begin", s.x_begin},
                        {"x_end", s.x_end},
                        {"violation", s.violation}});
    j["splits"] = splits;
    std::cout << j.dump(2) << '\n';
  } else if (witness.is_nearly) {
    std::cout << "nearly " << common.k << "-universal; absent = " << *witness.absent << '\n';
  } else {
    std::cout << "not nearly " << common.k << "-universal (" << witness.reason << ")\n";
  }
  return witness.is_nearly ? kExitYes : kExitNo;
}

int cmd_construct(const Common& common, const std::string& factor, const std::string& order) {
  nuniv::Alphabet alphabet = ordered_alphabet(nuniv::Alphabet(common.alphabet), order);
  std::string w = nuniv::construct_w_u(alphabet, factor);
  if (common.json) {
    nlohmann::json j;
    j["u"] = factor;
    j["word"] = w;
    j["length"] = w.size();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << w << '\n';
  }
  return kExitYes;
}

int cmd_absent(const Common& common, const std::string& word, const std::string& method) {
  nuniv::Alphabet alphabet(common.alphabet);
  alphabet.validate(word);
  std::vector<std::string> absent;
  if (method == "brute") {
    absent = nuniv::absent_factors_brute(alphabet, word, common.k, common.budget);
  } else if (method == "structured" || method == "notu") {
    for (const auto& witness : nuniv::absent_factors_structured(alphabet, word, common.k))
      absent.push_back(witness.u);
  } else {
    throw std::invalid_argument("--method must be structured or brute");
  }
  if (common.json) {
    nlohmann::json j;
    j["word"] = word;
    j["k"] = common.k;
    j["absent"] = absent;
    j["count"] = absent.size();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "absent factors (" << absent.size() << "):";
    for (const auto& u : absent) std::cout << ' ' << u;
    std::cout << '\n';
  }
  return kExitYes;
}

int cmd_congruent(const Common& common, const std::string& word1, const std::string& word2,
                  const std::string& method) {
  nuniv::Alphabet alphabet(common.alphabet);
  alphabet.validate(word1);
  alphabet.validate(word2);
  bool verdict;
  if (method == "signature") {
    verdict = nuniv::simon_congruent(alphabet, word1, word2, common.k,
                                     nuniv::CongruenceMode::exact_k, common.budget);
  } else if (method == "structured" || method == "mequiv") {
    verdict = nuniv::congruent_structured(alphabet, word1, word2, common.k);
  } else {
    throw std::invalid_argument("--method must be signature or structured");
  }
  if (common.json) {
    nlohmann::json j;
    j["word1"] = word1;
    j["word2"] = word2;
    j["k"] = common.k;
    j["method"] = method;
    j["congruent"] = verdict;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (verdict ? "congruent" : "not congruent") << '\n';
  }
  return verdict ? kExitYes : kExitNo;
}

int cmd_alpha_beta(const Common& common, const std::string& word) {
  nuniv::Alphabet alphabet(common.alphabet);
  nuniv::AlphaBetaFactorization fact;
  try {
    fact = nuniv::alpha_beta_factorize(alphabet, word, common.k);
  } catch (const std::logic_error& err) {
    throw std::invalid_argument(err.what());
  }
  if (common.json) {
    nlohmann::json j;
    j["word"] = word;
    j["k"] = common.k;
    j["alphas"] = fact.alphas;
    j["betas"] = fact.betas;
    nlohmann::json ab = nlohmann::json::array(), bb = nlohmann::json::array();
    for (auto [b, e] : fact.alpha_bounds) ab.push_back({b, e});
    for (auto [b, e] : fact.beta_bounds) bb.push_back({b, e});
    j["alpha_bounds"] = ab;
    j["beta_bounds"] = bb;
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < fact.alphas.size(); ++i) {
      std::cout << "alpha_" << i + 1 << ": " << fact.alphas[i] << '\n';
      if (i < fact.betas.size()) std::cout << "beta_" << i + 1 << ": " << fact.betas[i] << '\n';
    }
  }
  return kExitYes;
}

int cmd_basis(const Common& common, const std::string& factor, const std::string& order) {
  nuniv::Alphabet alphabet = ordered_alphabet(nuniv::Alphabet(common.alphabet), order);
  nuniv::Basis basis = nuniv::basis_of(alphabet, factor, common.budget);
  if (common.json) {
    nlohmann::json j;
    j["u"] = factor;
    j["w_u"] = basis.word_u;
    j["count"] = basis.count;
    j["elements"] = basis.elements;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "w_u: " << basis.word_u << "\ncount: " << basis.count << '\n';
    for (const auto& element : basis.elements) std::cout << element << '\n';
  }
  return kExitYes;
}

int cmd_census(const Common& common, std::uint64_t m, int max_len, const std::string& mode,
               const std::string& out) {
  nuniv::Alphabet alphabet(common.alphabet);
  nuniv::CongruenceMode congruence_mode;
  if (mode == "exact-k") {
    congruence_mode = nuniv::CongruenceMode::exact_k;
  } else if (mode == "up-to-k") {
    congruence_mode = nuniv::CongruenceMode::up_to_k;
  } else {
    throw std::invalid_argument("--mode must be exact-k or up-to-k");
  }
  nuniv::CensusReport report =
      nuniv::census(alphabet, m, common.k, max_len, congruence_mode, common.budget);
  if (!out.empty()) nuniv::write_census_report(report, out);
  if (common.json) {
    std::cout << nuniv::census_json(report) << '\n';
  } else {
    std::cout << "classes: " << report.class_count
              << (report.stabilized ? " (stabilized)" : " (NOT stabilized)") << '\n';
    if (report.formula_comparison)
      std::cout << "formula " << report.formula_comparison->claim << ": claimed "
                << report.formula_comparison->claimed << ", observed "
                << report.formula_comparison->observed
                << (report.formula_comparison->match ? " (match)" : " (MISMATCH)") << '\n';
    for (const auto& rep : report.representatives) std::cout << rep << '\n';
  }
  return kExitYes;
}

int cmd_verify(bool json, const std::vector<std::string>& ids, const nuniv::ClaimScale& scale,
               const std::string& out) {
  std::vector<nuniv::ClaimResult> results = nuniv::verify_claims(ids, scale);
  if (!out.empty()) {
    std::ofstream stream(out);
    stream << nuniv::claims_json(results) << '\n';
  }
  bool all_ok = true;
  if (json) {
    std::cout << nuniv::claims_json(results) << '\n';
  }
  for (const nuniv::ClaimResult& result : results) {
    if (result.status == nuniv::ClaimStatus::fail) all_ok = false;
    if (!json) {
      const char* status = result.status == nuniv::ClaimStatus::pass   ? "pass"
                           : result.status == nuniv::ClaimStatus::fail ? "FAIL"
                                                                       : "compare";
      std::cout << result.id << ": " << status << " (" << result.cases_checked << " cases, "
                << result.mismatches << " mismatches)";
      if (!result.detail.empty()) std::cout << " — " << result.detail;
      std::cout << '\n';
    }
  }
  return all_ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nearly k-universal word toolkit"};
  app.require_subcommand(1);

  Common analyze_opts, nearly_opts, construct_opts, absent_opts, congruent_opts, ab_opts,
      basis_opts, census_opts;
  std::string word, word2, factor, order, method_absent = "structured",
                                          method_congruent = "signature", census_mode = "exact-k",
                                          out_path;
  std::uint64_t census_m = 1;
  int census_max_len = 8;
  std::vector<std::string> verify_ids;
  bool verify_json = false;
  nuniv::ClaimScale scale;
  scale.budget = default_budget();

  auto* analyze = app.add_subcommand("analyze", "arch factorization, deficiency, extreme tag");
  add_common(analyze, analyze_opts);
  analyze->add_option("word", word)->required();

  auto* nearly = app.add_subcommand("check-nearly", "decide deficiency == 1");
  add_common(nearly, nearly_opts);
  nearly->add_option("word", word)->required();

  auto* construct = app.add_subcommand("construct", "minimal word whose only absent factor is u");
  add_common(construct, construct_opts, /*needs_k=*/false);
  construct->add_option("factor", factor)->required();
  construct->add_option("--order", order, "construction order (permutation of the alphabet)");

  auto* absent = app.add_subcommand("absent", "absent length-k factors");
  add_common(absent, absent_opts);
  absent->add_option("word", word)->required();
  absent->add_option("--method", method_absent, "structured (requires iota = k-1) or brute");

  auto* congruent = app.add_subcommand("congruent", "Simon congruence at level k");
  add_common(congruent, congruent_opts);
  congruent->add_option("word1", word)->required();
  congruent->add_option("word2", word2)->required();
  congruent->add_option("--method", method_congruent,
                        "signature (set equality) or structured (requires iota = k-1)");

  auto* alpha_beta = app.add_subcommand("alpha-beta", "alpha-beta factorization");
  add_common(alpha_beta, ab_opts);
  alpha_beta->add_option("word", word)->required();

  auto* basis = app.add_subcommand("basis", "basis of the class of w_u");
  add_common(basis, basis_opts, /*needs_k=*/false);
  basis->add_option("factor", factor)->required();
  basis->add_option("--order", order, "construction order (permutation of the alphabet)");

  auto* census = app.add_subcommand("census", "congruence-class census at deficiency m");
  add_common(census, census_opts);
  census->add_option("--m", census_m, "deficiency");
  census->add_option("--max-len", census_max_len, "maximum word length")->required();
  census->add_option("--mode", census_mode, "exact-k or up-to-k");
  census->add_option("--out", out_path, "write <out>.json and <out>.csv");

  auto* verify = app.add_subcommand("verify", "run registered brute-force claim checks");
  verify->add_option("claims", verify_ids, "claim ids (default: all)");
  verify->add_flag("--json", verify_json, "emit JSON");
  verify->add_option("--max-len", scale.binary_max_len, "binary-alphabet exhaustive length");
  verify->add_option("--ternary-max-len", scale.ternary_max_len, "ternary-alphabet length");
  verify->add_option("--max-k", scale.max_k, "largest k swept");
  verify->add_option("--budget", scale.budget, "object budget");
  verify->add_option("--out", out_path, "write JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& parse_error) {
    int code = app.exit(parse_error);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_opts, word);
    if (*nearly) return cmd_check_nearly(nearly_opts, word);
    if (*construct) return cmd_construct(construct_opts, factor, order);
    if (*absent) return cmd_absent(absent_opts, word, method_absent);
    if (*congruent) return cmd_congruent(congruent_opts, word, word2, method_congruent);
    if (*alpha_beta) return cmd_alpha_beta(ab_opts, word);
    if (*basis) return cmd_basis(basis_opts, factor, order);
    if (*census) return cmd_census(census_opts, census_m, census_max_len, census_mode, out_path);
    if (*verify) return cmd_verify(verify_json, verify_ids, scale, out_path);
  } catch (const nuniv::capacity_error& err) {
    std::cerr << "capacity: " << err.what() << '\n';
    return kExitCapacity;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
