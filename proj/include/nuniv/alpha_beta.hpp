#ifndef NUNIV_ALPHA_BETA_HPP
#define NUNIV_ALPHA_BETA_HPP

#include <string>
#include <vector>

#include "nuniv/word_core.hpp"

// Machinery for (k-1)-universal words: the alpha-beta factorization, the
// candidate sets M / M' over beta-block positions, the h-recursion counting
// absent k-factors, and the structured congruence test.

namespace nuniv {

struct AlphaBetaFactorization {
  int k = 0;
  std::vector<std::string> alphas;  // alpha_1 .. alpha_k
  std::vector<std::string> betas;   // beta_1 .. beta_{k-1}
  // 1-based inclusive bounds inside w; start > end encodes an empty block.
  std::vector<std::pair<int, int>> alpha_bounds;
  std::vector<std::pair<int, int>> beta_bounds;
};

// Aligns the arches of w and w^R: ar_i(w) = alpha_i beta_i,
// ar_i(w^R) = (beta_{k-i} alpha_{k-i+1})^R, alpha_k = r(w),
// alpha_1 = r(w^R)^R. Requires iota(w) = k-1.
AlphaBetaFactorization alpha_beta_factorize(const Alphabet& alphabet, std::string_view w, int k);

struct CandidateGraph {
  AlphaBetaFactorization fact;
  std::string word;
  std::vector<int> arch_level;  // f: arch_level[i] for 1-based position i; k on the rest
  // leftmost[level][letter rank] = 1-based position, or 0; levels 1..k-1.
  std::vector<std::vector<int>> leftmost;
  std::uint32_t root_letters = 0;        // admissible first letters of an absent factor
  std::vector<int> root_positions;       // their leftmost positions in arch 1
  std::vector<std::uint32_t> m_letters;  // successor-letter set per beta position
  std::vector<std::vector<int>> m_next;  // successor positions (levels <= k-2)
  std::vector<std::uint64_t> h;          // memoized chain counts per beta position
  std::uint64_t h_root = 0;
  std::uint32_t final_letters = 0;  // Sigma \ alph(r(w))
};

CandidateGraph candidate_graph(const Alphabet& alphabet, std::string_view w, int k);

struct AbsenceWitness {
  std::string u;           // absent length-k factor
  std::vector<int> chain;  // 1-based positions spelling u[1..k-1], one arch per step
};

// Depth-first enumeration of chains through M'; emitted words are exactly
// Sigma^k minus ScatFact_k(w), in alphabet-lex order.
std::vector<AbsenceWitness> absent_factors_structured(const Alphabet& alphabet,
                                                      std::string_view w, int k);

// h(1): the number of absent length-k factors, without enumeration.
std::uint64_t deficiency_structured(const Alphabet& alphabet, std::string_view w, int k);

// The shared-chain predicate: u is absent from w (given) and the candidate
// chains of w and w2 agree on u. Throws std::logic_error if u is a
// scattered factor of w.
bool predicate_C(const Alphabet& alphabet, std::string_view u, std::string_view w,
                 std::string_view w2, int k);

// Congruence at level k for two (k-1)-universal words via the predicate in
// both directions over each word's absent set. Words with different
// structured deficiencies are simply not congruent.
bool congruent_structured(const Alphabet& alphabet, std::string_view w, std::string_view w2,
                          int k);

}  // namespace nuniv

#endif  // NUNIV_ALPHA_BETA_HPP
