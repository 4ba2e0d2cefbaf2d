#include "nuniv/extremes.hpp"

namespace nuniv {

const char* to_string(ExtremeTag tag) {
  switch (tag) {
    case ExtremeTag::all_absent: return "all-absent";
    case ExtremeTag::single_present: return "single-present";
    case ExtremeTag::two_present: return "two-present";
    case ExtremeTag::none: return "none";
  }
  return "none";
}

ExtremeClassification classify_extreme(const Alphabet& alphabet, std::string_view w, int k) {
  alphabet.validate(w);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ExtremeClassification cls;
  if (static_cast<int>(w.size()) < k) {
    cls.tag = ExtremeTag::all_absent;
    return cls;
  }
  std::uint64_t count = count_distinct_subsequences_capped(alphabet, w, k, 3);
  if (count == 1) {
    cls.tag = ExtremeTag::single_present;
    return cls;
  }
  if (count != 2) return cls;
  cls.tag = ExtremeTag::two_present;
  // For k >= 2 exactly two present k-factors forces w = x^p y^q; at k = 1
  // the shape is unconstrained, so the detail fields stay empty then.
  std::string cond = condense(w);
  if (cond.size() != 2) return cls;
  cls.x = cond[0];
  cls.y = cond[1];
  std::size_t split = w.find(cls.y);
  cls.p = static_cast<int>(split);
  cls.q = static_cast<int>(w.size() - split);
  return cls;
}

DeficiencyTwoReport deficiency_two_check(const Alphabet& alphabet, std::string_view w, int k) {
  if (alphabet.sigma() <= 2) throw std::logic_error("the deficiency-2 property requires sigma > 2");
  if (deficiency(alphabet, w, k) != 2) throw std::logic_error("word does not have deficiency 2");
  DeficiencyTwoReport report;
  ArchFactorization fwd = arch_factorize(alphabet, w);
  report.iota_ok = fwd.iota == k - 1;
  ArchFactorization bwd = arch_factorize(alphabet, reversed(w));
  int fwd_rest = __builtin_popcount(alphabet.alph_mask(fwd.rest));
  int bwd_rest = __builtin_popcount(alphabet.alph_mask(bwd.rest));
  int sigma = alphabet.sigma();
  if (fwd_rest == sigma - 1 && bwd_rest == sigma - 1)
    report.branch = 1;
  else if ((fwd_rest == sigma - 1 && bwd_rest == sigma - 2) ||
           (bwd_rest == sigma - 1 && fwd_rest == sigma - 2))
    report.branch = 2;
  report.holds = report.iota_ok && report.branch != 0;
  return report;
}

}  // namespace nuniv
