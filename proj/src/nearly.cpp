#include "nuniv/nearly.hpp"

#include <algorithm>

namespace nuniv {

namespace {

SplitRecord split_check_impl(const Alphabet& alphabet, std::string_view w,
                             const ArchFactorization& fwd, const ArchFactorization& bwd,
                             int k_hat, int k_tilde) {
  SplitRecord rec;
  rec.k_hat = k_hat;
  rec.k_tilde = k_tilde;
  int n = static_cast<int>(w.size());
  if (fwd.iota < k_hat) {
    rec.violation = "fewer than k_hat arches";
    return rec;
  }
  if (bwd.iota < k_tilde) {
    rec.violation = "fewer than k_tilde reverse arches";
    return rec;
  }
  // A prefix u with iota(u) = k_hat and empty rest must end exactly at the
  // k_hat-th arch boundary of w; symmetrically the suffix v^R must start at
  // the k_tilde-th boundary of the reversed factorization. Both candidates
  // are unique, so the split reduces to the middle-block condition.
  int b = k_hat == 0 ? 0 : fwd.boundaries[static_cast<std::size_t>(k_hat - 1)];
  int c = k_tilde == 0 ? 0 : bwd.boundaries[static_cast<std::size_t>(k_tilde - 1)];
  if (b + c >= n) {
    rec.violation = "middle block is empty";
    return rec;
  }
  std::string_view x = w.substr(static_cast<std::size_t>(b), static_cast<std::size_t>(n - c - b));
  if (__builtin_popcount(alphabet.alph_mask(x)) != alphabet.sigma() - 1) {
    rec.violation = "middle block alphabet is not sigma-1";
    return rec;
  }
  rec.ok = true;
  rec.x_begin = b + 1;
  rec.x_end = n - c;
  return rec;
}

}  // namespace

SplitRecord check_split(const Alphabet& alphabet, std::string_view w, int k_hat, int k_tilde) {
  alphabet.validate(w);
  return split_check_impl(alphabet, w, arch_factorize(alphabet, w),
                          arch_factorize(alphabet, reversed(w)), k_hat, k_tilde);
}

NearlyWitness check_nearly(const Alphabet& alphabet, std::string_view w, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  alphabet.validate(w);
  NearlyWitness wit;
  if (alphabet.sigma() == 1) {
    // Over a unary alphabet the single length-k factor is absent exactly
    // when |w| < k; the split machinery needs sigma >= 2.
    wit.is_nearly = static_cast<int>(w.size()) < k;
    if (wit.is_nearly) {
      wit.absent = std::string(static_cast<std::size_t>(k), alphabet.letter(0));
      wit.reason = "ok";
    } else {
      wit.reason = "length >= k over unary alphabet";
    }
    return wit;
  }
  ArchFactorization fwd = arch_factorize(alphabet, w);
  if (fwd.iota != k - 1) {
    wit.reason = "iota(w) != k-1";
    return wit;
  }
  if (__builtin_popcount(alphabet.alph_mask(fwd.rest)) != alphabet.sigma() - 1) {
    wit.reason = "alph(r(w)) does not miss exactly one letter";
    return wit;
  }
  ArchFactorization bwd = arch_factorize(alphabet, reversed(w));
  if (__builtin_popcount(alphabet.alph_mask(bwd.rest)) != alphabet.sigma() - 1) {
    wit.reason = "alph(r(w^R)) does not miss exactly one letter";
    return wit;
  }
  std::vector<std::pair<int, int>> splits;
  if (k % 2 == 1) {
    splits.emplace_back((k - 1) / 2, (k - 1) / 2);
  } else {
    splits.emplace_back(k / 2, k / 2 - 1);
    splits.emplace_back(k / 2 - 1, k / 2);
  }
  bool all_ok = true;
  for (auto [k_hat, k_tilde] : splits) {
    SplitRecord rec = split_check_impl(alphabet, w, fwd, bwd, k_hat, k_tilde);
    all_ok = all_ok && rec.ok;
    wit.splits.push_back(std::move(rec));
  }
  if (!all_ok) {
    wit.reason = "split factorization failed";
    return wit;
  }
  wit.is_nearly = true;
  wit.reason = "ok";
  wit.absent = fwd.modus + missing_rest_letter(alphabet, fwd);
  return wit;
}

std::string absent_factor_nearly(const Alphabet& alphabet, std::string_view w, int k) {
  NearlyWitness wit = check_nearly(alphabet, w, k);
  if (!wit.is_nearly)
    throw std::logic_error("word is not nearly " + std::to_string(k) + "-universal: " + wit.reason);
  return *wit.absent;
}

std::string construct_w_u(const Alphabet& alphabet, std::string_view u) {
  if (u.empty()) throw std::invalid_argument("absent factor must be nonempty");
  alphabet.validate(u);
  std::size_t k = u.size();
  std::string w;
  w.reserve(k * static_cast<std::size_t>(alphabet.sigma() + 1));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    w += alphabet.word_without(u[i]);
    if (u[i + 1] != u[i]) w.push_back(u[i + 1]);
    w.push_back(u[i]);
  }
  w += alphabet.word_without(u[k - 1]);
  return w;
}

namespace {

std::vector<std::string> block_permutations(const Alphabet& alphabet, std::string block) {
  // block letters are distinct; enumerate images in alphabet-lex order.
  std::vector<std::string> out;
  std::sort(block.begin(), block.end(),
            [&](char a, char b) { return alphabet.rank(a) < alphabet.rank(b); });
  do {
    out.push_back(block);
  } while (std::next_permutation(block.begin(), block.end(), [&](char a, char b) {
    return alphabet.rank(a) < alphabet.rank(b);
  }));
  if (out.empty()) out.emplace_back();  // sigma == 1: the empty block
  return out;
}

}  // namespace

Basis basis_of(const Alphabet& alphabet, std::string_view u, std::uint64_t budget) {
  alphabet.validate(u);
  if (u.empty()) throw std::invalid_argument("absent factor must be nonempty");
  std::size_t k = u.size();
  Basis basis;
  basis.word_u = construct_w_u(alphabet, u);

  std::vector<std::vector<std::string>> choices;  // permutable block images
  std::vector<std::string> glue;                  // fixed part after block i
  for (std::size_t i = 0; i + 1 < k; ++i) {
    choices.push_back(block_permutations(alphabet, alphabet.word_without(u[i])));
    std::string s;
    if (u[i + 1] != u[i]) s.push_back(u[i + 1]);
    s.push_back(u[i]);
    glue.push_back(std::move(s));
  }
  choices.push_back(block_permutations(alphabet, alphabet.word_without(u[k - 1])));
  glue.emplace_back();

  std::uint64_t count = 1;
  for (const auto& c : choices) {
    if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(c.size()), &count) ||
        count > budget)
      throw capacity_error("basis size exceeds budget of " + std::to_string(budget));
  }
  basis.count = count;

  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::string elem;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      elem += choices[i][pick[i]];
      elem += glue[i];
    }
    basis.elements.push_back(std::move(elem));
    std::size_t i = choices.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return basis;
}

bool in_pump_set(const Alphabet& alphabet, std::string_view candidate, std::string_view v, int k) {
  NearlyWitness wit = check_nearly(alphabet, v, k);
  if (!wit.is_nearly) throw std::logic_error("pump base word is not nearly k-universal");
  alphabet.validate(candidate);
  ArchFactorization afv = arch_factorize(alphabet, v);
  ArchFactorization afc = arch_factorize(alphabet, candidate);
  if (afc.iota != afv.iota) return false;
  if (afc.modus != afv.modus) return false;
  for (int i = 0; i < afv.iota; ++i) {
    std::string_view inner_v(afv.arches[static_cast<std::size_t>(i)]);
    inner_v.remove_suffix(1);
    std::string_view inner_c(afc.arches[static_cast<std::size_t>(i)]);
    inner_c.remove_suffix(1);
    if (alphabet.alph_mask(inner_c) != alphabet.alph_mask(inner_v)) return false;
    if (!is_scattered_factor(alphabet, inner_v, inner_c)) return false;
  }
  if (afc.rest.size() < afv.rest.size()) return false;
  return alphabet.alph_mask(afc.rest) == alphabet.alph_mask(afv.rest);
}

bool class_membership(const Alphabet& alphabet, std::string_view w, std::string_view u, int k,
                      MembershipMethod method, std::uint64_t budget) {
  alphabet.validate(u);
  if (static_cast<int>(u.size()) != k)
    throw std::invalid_argument("absent factor length must equal k");
  if (method == MembershipMethod::direct) {
    NearlyWitness wit = check_nearly(alphabet, w, k);
    return wit.is_nearly && *wit.absent == u;
  }
  Basis basis = basis_of(alphabet, u, budget);
  return std::any_of(basis.elements.begin(), basis.elements.end(),
                     [&](const std::string& v) { return in_pump_set(alphabet, w, v, k); });
}

}  // namespace nuniv
