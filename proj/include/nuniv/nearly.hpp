#ifndef NUNIV_NEARLY_HPP
#define NUNIV_NEARLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "nuniv/word_core.hpp"

// Nearly k-universal words (deficiency exactly 1): linear-time decision,
// O(k) minimal witness construction, and the basis / pump-set view of the
// congruence classes.

namespace nuniv {

// One checked split k_hat + k_tilde + 1 = k of the decision procedure.
struct SplitRecord {
  int k_hat = 0;
  int k_tilde = 0;
  bool ok = false;
  // 1-based bounds of the middle block x when the split succeeds.
  int x_begin = 0;
  int x_end = 0;
  std::string violation;  // empty when ok
};

struct NearlyWitness {
  bool is_nearly = false;
  std::optional<std::string> absent;  // modus(w) + a_w when nearly
  std::string reason;                 // first violated condition, or "ok"
  std::vector<SplitRecord> splits;
};

// Decides deficiency(w, k) == 1 in time linear in |w| (constant alphabet):
// iota and rest-alphabet checks, then one perfect-prefix/suffix split for
// odd k and both mandated splits for even k.
NearlyWitness check_nearly(const Alphabet& alphabet, std::string_view w, int k);

// The unique absent length-k factor of a nearly k-universal word.
// Throws std::logic_error if w is not nearly k-universal.
std::string absent_factor_nearly(const Alphabet& alphabet, std::string_view w, int k);

// Canonical minimal-length word whose only absent length-k factor is u.
// Each arch is emitted as the ordered (sigma-1)-letter block over
// Sigma \ {u[i]}, followed by u[i+1] when the condensation steps, then u[i];
// the rest is the ordered block over Sigma \ {u[k]}.
std::string construct_w_u(const Alphabet& alphabet, std::string_view u);

struct Basis {
  std::string word_u;                 // canonical representative w_u
  std::uint64_t count = 0;            // ((sigma-1)!)^(k-1) * (sigma-1)!
  std::vector<std::string> elements;  // all per-block permutation images
};

// All words obtained from w_u by permuting the letters inside each
// permutable block (the (sigma-1)-letter arch prefixes and the rest).
Basis basis_of(const Alphabet& alphabet, std::string_view u, std::uint64_t budget = kDefaultBudget);

// Membership in P(v): candidate arises from v by replacing each arch with a
// word keeping the arch-final letter and a supersequence of the arch
// interior, and the rest by a word with the same alphabet and at least the
// same length. Throws std::logic_error if v is not nearly k-universal.
bool in_pump_set(const Alphabet& alphabet, std::string_view candidate, std::string_view v, int k);

enum class MembershipMethod { direct, basis_pump };

// Whether w lies in the congruence class of words missing exactly u.
bool class_membership(const Alphabet& alphabet, std::string_view w, std::string_view u, int k,
                      MembershipMethod method = MembershipMethod::direct,
                      std::uint64_t budget = kDefaultBudget);

// Test-facing helper: checks the u x v^R factorization for one given split.
SplitRecord check_split(const Alphabet& alphabet, std::string_view w, int k_hat, int k_tilde);

}  // namespace nuniv

#endif  // NUNIV_NEARLY_HPP
