#ifndef NUNIV_ORACLE_LAB_HPP
#define NUNIV_ORACLE_LAB_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nuniv/word_core.hpp"

// Exhaustive enumeration, congruence-class census, and the claim registry
// that maps every statement in scope to a runnable brute-force check.

namespace nuniv {

// All w with |w| <= max_len and deficiency(w, k) = m, in length-then-lex
// order. Requires the total word count to stay within budget.
void enumerate_nuniv(const Alphabet& alphabet, std::uint64_t m, int k, int max_len,
                     std::uint64_t budget, const std::function<void(const std::string&)>& emit);

struct FormulaComparison {
  std::string claim;
  std::uint64_t claimed = 0;
  std::uint64_t observed = 0;
  bool match = false;
};

struct CensusReport {
  std::string alphabet;
  std::uint64_t m = 0;
  int k = 0;
  int max_len = 0;
  CongruenceMode mode = CongruenceMode::exact_k;
  std::uint64_t class_count = 0;
  bool stabilized = false;  // no new signature in the last two length steps
  std::vector<std::string> representatives;  // shortest-lex member per class
  std::optional<FormulaComparison> formula_comparison;
  std::int64_t runtime_ms = 0;
};

CensusReport census(const Alphabet& alphabet, std::uint64_t m, int k, int max_len,
                    CongruenceMode mode = CongruenceMode::exact_k,
                    std::uint64_t budget = kDefaultBudget);

std::string census_json(const CensusReport& report);
std::string census_csv(const CensusReport& report);
// Writes <basepath>.json and <basepath>.csv.
void write_census_report(const CensusReport& report, const std::string& basepath);

enum class ClaimStatus { pass, fail, compare };

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::fail;
  std::uint64_t cases_checked = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> witnesses;  // offending words, when any
  std::string detail;
};

// Per-claim exhaustive scale. The defaults keep the whole registry in the
// low seconds; acceptance runs use larger ranges.
struct ClaimScale {
  int binary_max_len = 12;
  int ternary_max_len = 8;
  int max_k = 4;
  std::uint64_t budget = kDefaultBudget;
};

std::vector<std::string> claim_ids();

// Runs the registered checks; unknown ids throw std::invalid_argument.
// Empty id list = the whole registry. Failures are data, not errors.
std::vector<ClaimResult> verify_claims(const std::vector<std::string>& ids,
                                       const ClaimScale& scale = {});

std::string claims_json(const std::vector<ClaimResult>& results);

}  // namespace nuniv

#endif  // NUNIV_ORACLE_LAB_HPP
