#ifndef NUNIV_EXTREMES_HPP
#define NUNIV_EXTREMES_HPP

#include <string>

#include "nuniv/word_core.hpp"

// Classification for the extreme deficiencies sigma^k, sigma^k - 1 and
// sigma^k - 2, plus the structural check for deficiency 2.

namespace nuniv {

enum class ExtremeTag { all_absent, single_present, two_present, none };

struct ExtremeClassification {
  ExtremeTag tag = ExtremeTag::none;
  // two_present detail: w = x^p y^q.
  char x = 0;
  char y = 0;
  int p = 0;
  int q = 0;
};

const char* to_string(ExtremeTag tag);

// Tags w by |ScatFact_k(w)| in {0, 1, 2}; counting is capped at 3 so long
// words stay cheap.
ExtremeClassification classify_extreme(const Alphabet& alphabet, std::string_view w, int k);

struct DeficiencyTwoReport {
  bool iota_ok = false;
  // 1: both rests miss exactly one letter; 2: one direction misses one
  // letter and the other two. 0 when neither branch holds.
  int branch = 0;
  bool holds = false;
};

// Structural property of words with deficiency exactly 2 over sigma > 2.
// Throws std::logic_error unless deficiency(w, k) == 2 and sigma > 2.
DeficiencyTwoReport deficiency_two_check(const Alphabet& alphabet, std::string_view w, int k);

}  // namespace nuniv

#endif  // NUNIV_EXTREMES_HPP
