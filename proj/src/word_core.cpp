#include "nuniv/word_core.hpp"

#include <algorithm>
#include <cctype>

namespace nuniv {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  rank_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char c = letters_[i];
    if (!std::islower(static_cast<unsigned char>(c)))
      throw std::invalid_argument("alphabet letters must be ASCII lowercase");
    if (rank_[static_cast<unsigned char>(c)] >= 0)
      throw std::invalid_argument(std::string("duplicate alphabet letter: ") + c);
    rank_[static_cast<unsigned char>(c)] = static_cast<std::int8_t>(i);
  }
}

void Alphabet::validate(std::string_view w) const {
  for (char c : w)
    if (!contains(c))
      throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet " + letters_);
}

std::uint32_t Alphabet::alph_mask(std::string_view w) const {
  std::uint32_t mask = 0;
  for (char c : w) {
    int r = rank(c);
    if (r < 0) throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet " + letters_);
    mask |= 1u << r;
  }
  return mask;
}

std::string Alphabet::word_of_mask(std::uint32_t mask) const {
  std::string out;
  for (int i = 0; i < sigma(); ++i)
    if (mask & (1u << i)) out.push_back(letter(i));
  return out;
}

std::string Alphabet::word_without(char a) const {
  std::string out;
  for (char c : letters_)
    if (c != a) out.push_back(c);
  return out;
}

bool Alphabet::lex_less(std::string_view a, std::string_view b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ra = rank(a[i]), rb = rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

std::string condense(std::string_view w) {
  std::string out;
  for (char c : w)
    if (out.empty() || out.back() != c) out.push_back(c);
  return out;
}

NextOccurrenceTable::NextOccurrenceTable(const Alphabet& alphabet, std::string_view w)
    : n_(static_cast<int>(w.size())), sigma_(alphabet.sigma()) {
  alphabet.validate(w);
  rank_.fill(-1);
  for (int i = 0; i < sigma_; ++i)
    rank_[static_cast<unsigned char>(alphabet.letter(i))] = static_cast<std::int8_t>(i);
  table_.assign(static_cast<std::size_t>(n_ + 1) * sigma_, 0);
  for (int pos = n_ - 1; pos >= 0; --pos) {
    for (int c = 0; c < sigma_; ++c)
      table_[static_cast<std::size_t>(pos) * sigma_ + c] =
          table_[static_cast<std::size_t>(pos + 1) * sigma_ + c];
    int c = rank_[static_cast<unsigned char>(w[static_cast<std::size_t>(pos)])];
    table_[static_cast<std::size_t>(pos) * sigma_ + c] = pos + 1;
  }
}

bool is_scattered_factor(const NextOccurrenceTable& table, std::string_view u) {
  int pos = 0;
  for (char c : u) {
    pos = table.next(pos, c);
    if (pos == 0) return false;
  }
  return true;
}

bool is_scattered_factor(const Alphabet& alphabet, std::string_view u, std::string_view w) {
  alphabet.validate(u);
  return is_scattered_factor(NextOccurrenceTable(alphabet, w), u);
}

namespace {

void check_enumeration_budget(const Alphabet& alphabet, int k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(alphabet.sigma());
    if (total > budget)
      throw capacity_error("sigma^k exceeds enumeration budget of " + std::to_string(budget));
  }
}

// DFS over present (resp. absent) length-k extensions via the automaton.
void collect_scatfacts(const Alphabet& alphabet, const NextOccurrenceTable& table, int k,
                       bool want_present, std::string& prefix, int pos, bool alive,
                       std::vector<std::string>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    if (alive == want_present) out.push_back(prefix);
    return;
  }
  for (int i = 0; i < alphabet.sigma(); ++i) {
    char c = alphabet.letter(i);
    int npos = alive ? table.next(pos, c) : 0;
    bool nalive = alive && npos != 0;
    if (want_present && !nalive) continue;
    prefix.push_back(c);
    collect_scatfacts(alphabet, table, k, want_present, prefix, npos, nalive, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::string> scatfact_set(const Alphabet& alphabet, std::string_view w, int k,
                                      std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  check_enumeration_budget(alphabet, k, budget);
  NextOccurrenceTable table(alphabet, w);
  std::vector<std::string> out;
  std::string prefix;
  collect_scatfacts(alphabet, table, k, true, prefix, 0, true, out);
  return out;
}

std::vector<std::string> absent_factors_brute(const Alphabet& alphabet, std::string_view w, int k,
                                              std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  check_enumeration_budget(alphabet, k, budget);
  NextOccurrenceTable table(alphabet, w);
  std::vector<std::string> out;
  std::string prefix;
  collect_scatfacts(alphabet, table, k, false, prefix, 0, true, out);
  return out;
}

std::uint64_t count_distinct_subsequences(const Alphabet& alphabet, std::string_view w, int k) {
  alphabet.validate(w);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return 1;
  // dp[j] = distinct subsequences of length j in the processed prefix;
  // prev[c][j] holds dp[j-1] as of c's previous occurrence.
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(k) + 1, 0);
  dp[0] = 1;
  std::vector<std::vector<std::uint64_t>> prev(
      static_cast<std::size_t>(alphabet.sigma()),
      std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
  for (char ch : w) {
    auto& pr = prev[static_cast<std::size_t>(alphabet.rank(ch))];
    for (int j = k; j >= 1; --j) {
      std::uint64_t gained = dp[static_cast<std::size_t>(j - 1)] - pr[static_cast<std::size_t>(j)];
      pr[static_cast<std::size_t>(j)] = dp[static_cast<std::size_t>(j - 1)];
      std::uint64_t sum;
      if (__builtin_add_overflow(dp[static_cast<std::size_t>(j)], gained, &sum))
        throw capacity_error("distinct subsequence count overflows 64 bits");
      dp[static_cast<std::size_t>(j)] = sum;
    }
  }
  return dp[static_cast<std::size_t>(k)];
}

std::uint64_t count_distinct_subsequences_capped(const Alphabet& alphabet, std::string_view w,
                                                 int k, std::uint64_t cap) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return std::min<std::uint64_t>(1, cap);
  NextOccurrenceTable table(alphabet, w);
  int n = table.length();
  // paths[p] = saturated number of distinct length-j continuations from state p.
  std::vector<std::uint64_t> paths(static_cast<std::size_t>(n) + 1, 1);
  std::vector<std::uint64_t> next_paths(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j < k; ++j) {
    for (int p = 0; p <= n; ++p) {
      std::uint64_t total = 0;
      for (int c = 0; c < alphabet.sigma(); ++c) {
        int q = table.next(p, alphabet.letter(c));
        if (q != 0) total = std::min(cap, total + paths[static_cast<std::size_t>(q)]);
      }
      next_paths[static_cast<std::size_t>(p)] = total;
    }
    paths.swap(next_paths);
  }
  return paths[0];
}

std::uint64_t pow_checked(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(out, base, &out))
      throw capacity_error("sigma^k overflows 64 bits");
  return out;
}

ArchFactorization arch_factorize(const Alphabet& alphabet, std::string_view w) {
  alphabet.validate(w);
  ArchFactorization af;
  std::uint32_t full = alphabet.full_mask();
  std::uint32_t seen = 0;
  std::size_t arch_start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    seen |= 1u << alphabet.rank(w[i]);
    if (seen == full) {
      af.arches.emplace_back(w.substr(arch_start, i - arch_start + 1));
      af.boundaries.push_back(static_cast<int>(i) + 1);
      af.modus.push_back(w[i]);
      seen = 0;
      arch_start = i + 1;
    }
  }
  af.rest = std::string(w.substr(arch_start));
  af.iota = static_cast<int>(af.arches.size());
  return af;
}

char missing_rest_letter(const Alphabet& alphabet, const ArchFactorization& af) {
  std::uint32_t missing = alphabet.full_mask() & ~alphabet.alph_mask(af.rest);
  if (__builtin_popcount(missing) != 1)
    throw std::logic_error("rest alphabet does not miss exactly one letter");
  return alphabet.letter(__builtin_ctz(missing));
}

bool is_perfectly_universal(const Alphabet& alphabet, std::string_view w, int j) {
  ArchFactorization fwd = arch_factorize(alphabet, w);
  return fwd.iota == j && fwd.rest.empty();
}

bool simon_congruent(const Alphabet& alphabet, std::string_view w1, std::string_view w2, int k,
                     CongruenceMode mode, std::uint64_t budget) {
  int lo = mode == CongruenceMode::exact_k ? k : 1;
  for (int j = lo; j <= k; ++j)
    if (scatfact_set(alphabet, w1, j, budget) != scatfact_set(alphabet, w2, j, budget))
      return false;
  return true;
}

std::uint64_t deficiency(const Alphabet& alphabet, std::string_view w, int k) {
  return pow_checked(static_cast<std::uint64_t>(alphabet.sigma()), k) -
         count_distinct_subsequences(alphabet, w, k);
}

}  // namespace nuniv
