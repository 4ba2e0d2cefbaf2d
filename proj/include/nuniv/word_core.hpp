#ifndef NUNIV_WORD_CORE_HPP
#define NUNIV_WORD_CORE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Shared substrate: alphabets, words as plain strings over an alphabet,
// subsequence (scattered factor) queries, arch factorization, and the
// brute-force oracles everything else is tested against.

namespace nuniv {

// Thrown when an operation would materialize more objects than its budget
// allows, or when a count does not fit the result type.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

// Ordered alphabet of distinct ASCII lowercase letters. The sequence order
// defines the total order used for lexicographic enumeration everywhere.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters);

  int sigma() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  char letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  bool contains(char a) const { return rank(a) >= 0; }
  // Position of `a` in the alphabet order, or -1.
  int rank(char a) const {
    unsigned char u = static_cast<unsigned char>(a);
    return u < 128 ? rank_[u] : -1;
  }

  // Throws std::invalid_argument if w uses a letter outside the alphabet.
  void validate(std::string_view w) const;

  std::uint32_t full_mask() const { return sigma() >= 32 ? ~0u : (1u << sigma()) - 1; }
  std::uint32_t alph_mask(std::string_view w) const;
  // Letters of `mask` concatenated in alphabet order.
  std::string word_of_mask(std::uint32_t mask) const;
  // All letters except `a`, in alphabet order (the canonical word over Sigma \ {a}).
  std::string word_without(char a) const;

  // Lexicographic comparison w.r.t. the alphabet order (not ASCII).
  bool lex_less(std::string_view a, std::string_view b) const;

 private:
  std::string letters_;
  std::array<std::int8_t, 128> rank_{};
};

// Maximal runs of equal letters collapsed to a single letter.
std::string condense(std::string_view w);

inline std::string reversed(std::string_view w) { return std::string(w.rbegin(), w.rend()); }

// next(p, a) = smallest 1-based position j > p with w[j] = a, or 0.
class NextOccurrenceTable {
 public:
  NextOccurrenceTable(const Alphabet& alphabet, std::string_view w);

  int length() const { return n_; }
  int next(int pos, char a) const {
    int r = sigma_ ? rank_[static_cast<unsigned char>(a)] : -1;
    return r < 0 ? 0 : table_[static_cast<std::size_t>(pos) * sigma_ + r];
  }

 private:
  int n_;
  int sigma_;
  std::array<std::int8_t, 128> rank_{};
  std::vector<std::int32_t> table_;
};

bool is_scattered_factor(const Alphabet& alphabet, std::string_view u, std::string_view w);
bool is_scattered_factor(const NextOccurrenceTable& table, std::string_view u);

// Exactly the length-k scattered factors of w, in alphabet-lexicographic
// order. Requires sigma^k <= budget.
std::vector<std::string> scatfact_set(const Alphabet& alphabet, std::string_view w, int k,
                                      std::uint64_t budget = kDefaultBudget);

// Complement of scatfact_set in Sigma^k, same order and budget rule.
std::vector<std::string> absent_factors_brute(const Alphabet& alphabet, std::string_view w, int k,
                                              std::uint64_t budget = kDefaultBudget);

// |ScatFact_k(w)| via the distinct-subsequence DP with last-occurrence
// correction. Throws capacity_error if the count overflows 64 bits.
std::uint64_t count_distinct_subsequences(const Alphabet& alphabet, std::string_view w, int k);

// Same count, saturated at `cap`; never overflows. Computed along the
// subsequence automaton, so it doubles as an independent route in tests.
std::uint64_t count_distinct_subsequences_capped(const Alphabet& alphabet, std::string_view w,
                                                 int k, std::uint64_t cap);

// sigma^k, or capacity_error on 64-bit overflow.
std::uint64_t pow_checked(std::uint64_t base, int exp);

struct ArchFactorization {
  std::vector<std::string> arches;
  // boundaries[i] = 1-based end position of arch i+1 within w.
  std::vector<int> boundaries;
  std::string rest;
  int iota = 0;
  std::string modus;  // final letters of the arches

  int rest_start(int total_length) const { return total_length - static_cast<int>(rest.size()) + 1; }
};

// Greedy leftmost arch factorization.
ArchFactorization arch_factorize(const Alphabet& alphabet, std::string_view w);

// The unique letter missing from alph(r(w)); requires |alph(r(w))| = sigma-1.
char missing_rest_letter(const Alphabet& alphabet, const ArchFactorization& af);

// iota(w) = j with empty rest: the arches cover w exactly.
bool is_perfectly_universal(const Alphabet& alphabet, std::string_view w, int j);

enum class CongruenceMode { exact_k, up_to_k };

// Equality of ScatFact sets at level k (exact_k) or at all levels <= k.
bool simon_congruent(const Alphabet& alphabet, std::string_view w1, std::string_view w2, int k,
                     CongruenceMode mode = CongruenceMode::exact_k,
                     std::uint64_t budget = kDefaultBudget);

// sigma^k - |ScatFact_k(w)|.
std::uint64_t deficiency(const Alphabet& alphabet, std::string_view w, int k);

// All words over the alphabet of length <= max_len in length-then-lex order.
template <typename Fn>
void for_each_word(const Alphabet& alphabet, int max_len, Fn&& fn) {
  std::string w;
  fn(static_cast<const std::string&>(w));
  if (alphabet.sigma() == 0) return;
  for (int len = 1; len <= max_len; ++len) {
    w.assign(static_cast<std::size_t>(len), alphabet.letter(0));
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      fn(static_cast<const std::string&>(w));
      int i = len - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == alphabet.sigma() - 1) {
        digits[static_cast<std::size_t>(i)] = 0;
        w[static_cast<std::size_t>(i)] = alphabet.letter(0);
        --i;
      }
      if (i < 0) break;
      ++digits[static_cast<std::size_t>(i)];
      w[static_cast<std::size_t>(i)] = alphabet.letter(digits[static_cast<std::size_t>(i)]);
    }
  }
}

}  // namespace nuniv

#endif  // NUNIV_WORD_CORE_HPP
