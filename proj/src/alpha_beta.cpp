#include "nuniv/alpha_beta.hpp"

#include <algorithm>

namespace nuniv {

AlphaBetaFactorization alpha_beta_factorize(const Alphabet& alphabet, std::string_view w, int k) {
  alphabet.validate(w);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ArchFactorization fwd = arch_factorize(alphabet, w);
  if (fwd.iota != k - 1)
    throw std::logic_error("alpha-beta factorization requires iota(w) = k-1, got iota = " +
                           std::to_string(fwd.iota));
  int n = static_cast<int>(w.size());
  AlphaBetaFactorization fact;
  fact.k = k;
  if (k == 1) {
    fact.alphas.emplace_back(w);
    fact.alpha_bounds.emplace_back(1, n);
    return fact;
  }
  ArchFactorization bwd = arch_factorize(alphabet, reversed(w));

  auto block = [&](int begin, int end) {  // 1-based inclusive
    return std::string(w.substr(static_cast<std::size_t>(begin - 1),
                                static_cast<std::size_t>(end - begin + 1)));
  };
  for (int i = 1; i <= k - 1; ++i) {
    int arch_begin = i == 1 ? 1 : fwd.boundaries[static_cast<std::size_t>(i - 2)] + 1;
    int arch_end = fwd.boundaries[static_cast<std::size_t>(i - 1)];
    // beta_i starts where the (k-i)-th reverse arch ends, mapped into w.
    int beta_begin = n - bwd.boundaries[static_cast<std::size_t>(k - i - 1)] + 1;
    if (beta_begin < arch_begin || beta_begin > arch_end + 1)
      throw std::logic_error("reverse arch boundary fell outside its forward arch");
    fact.alphas.push_back(block(arch_begin, beta_begin - 1));
    fact.alpha_bounds.emplace_back(arch_begin, beta_begin - 1);
    fact.betas.push_back(block(beta_begin, arch_end));
    fact.beta_bounds.emplace_back(beta_begin, arch_end);
  }
  int rest_begin = fwd.boundaries[static_cast<std::size_t>(k - 2)] + 1;
  fact.alphas.push_back(block(rest_begin, n));
  fact.alpha_bounds.emplace_back(rest_begin, n);
  return fact;
}

CandidateGraph candidate_graph(const Alphabet& alphabet, std::string_view w, int k) {
  CandidateGraph g;
  g.fact = alpha_beta_factorize(alphabet, w, k);
  g.word = std::string(w);
  int n = static_cast<int>(w.size());
  int sigma = alphabet.sigma();
  g.final_letters = alphabet.full_mask() & ~alphabet.alph_mask(g.fact.alphas.back());

  if (k == 1) {
    g.h_root = static_cast<std::uint64_t>(__builtin_popcount(g.final_letters));
    return g;
  }

  ArchFactorization fwd = arch_factorize(alphabet, w);
  g.arch_level.assign(static_cast<std::size_t>(n) + 1, k);
  for (int i = 1, level = 1; i <= n; ++i) {
    if (level <= k - 1) {
      g.arch_level[static_cast<std::size_t>(i)] = level;
      if (i == fwd.boundaries[static_cast<std::size_t>(level - 1)]) ++level;
    }
  }

  g.leftmost.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(sigma), 0));
  for (int i = 1; i <= n; ++i) {
    int level = g.arch_level[static_cast<std::size_t>(i)];
    if (level >= k) continue;
    int r = alphabet.rank(w[static_cast<std::size_t>(i - 1)]);
    int& slot = g.leftmost[static_cast<std::size_t>(level)][static_cast<std::size_t>(r)];
    if (slot == 0) slot = i;
  }

  g.root_letters = alphabet.alph_mask(g.fact.betas[0]) & ~alphabet.alph_mask(g.fact.alphas[0]);
  for (int r = 0; r < sigma; ++r)
    if (g.root_letters & (1u << r)) g.root_positions.push_back(g.leftmost[1][static_cast<std::size_t>(r)]);

  g.m_letters.assign(static_cast<std::size_t>(n) + 1, 0);
  g.m_next.assign(static_cast<std::size_t>(n) + 1, {});
  g.h.assign(static_cast<std::size_t>(n) + 1, 0);

  for (int level = k - 1; level >= 1; --level) {
    const std::string& beta = g.fact.betas[static_cast<std::size_t>(level - 1)];
    auto [beta_begin, beta_end] = g.fact.beta_bounds[static_cast<std::size_t>(level - 1)];
    std::uint32_t next_alph = level == k - 1
                                  ? g.final_letters
                                  : alphabet.alph_mask(g.fact.betas[static_cast<std::size_t>(level)]);
    std::uint32_t alpha_next_mask = alphabet.alph_mask(g.fact.alphas[static_cast<std::size_t>(level)]);
    // Scan beta right to left, tracking the alphabet of the suffix after j.
    std::uint32_t suffix_mask = alpha_next_mask;
    std::vector<std::uint32_t> masks(beta.size());
    for (int off = static_cast<int>(beta.size()) - 1; off >= 0; --off) {
      std::uint32_t prefix_mask = alphabet.alph_mask(std::string_view(beta).substr(0, static_cast<std::size_t>(off) + 1));
      masks[static_cast<std::size_t>(off)] = (next_alph & ~suffix_mask) & prefix_mask;
      suffix_mask |= 1u << alphabet.rank(beta[static_cast<std::size_t>(off)]);
    }
    for (int j = beta_begin; j <= beta_end; ++j) {
      std::uint32_t m = masks[static_cast<std::size_t>(j - beta_begin)];
      g.m_letters[static_cast<std::size_t>(j)] = m;
      if (level == k - 1) {
        // Base of the recursion: each admissible successor letter at the last
        // chain level pairs with this position's own M set, not with the full
        // final-letter set.
        g.h[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(__builtin_popcount(m));
        continue;
      }
      std::uint64_t total = 0;
      for (int r = 0; r < sigma; ++r) {
        if (!(m & (1u << r))) continue;
        int pos = g.leftmost[static_cast<std::size_t>(level + 1)][static_cast<std::size_t>(r)];
        g.m_next[static_cast<std::size_t>(j)].push_back(pos);
        if (__builtin_add_overflow(total, g.h[static_cast<std::size_t>(pos)], &total))
          throw capacity_error("chain count overflows 64 bits");
      }
      g.h[static_cast<std::size_t>(j)] = total;
    }
  }
  for (int pos : g.root_positions) {
    if (__builtin_add_overflow(g.h_root, g.h[static_cast<std::size_t>(pos)], &g.h_root))
      throw capacity_error("chain count overflows 64 bits");
  }
  return g;
}

namespace {

void collect_chains(const Alphabet& alphabet, const CandidateGraph& g, int k, int level, int pos,
                    std::string& u, std::vector<int>& chain, std::vector<AbsenceWitness>& out) {
  if (level == k) {
    std::uint32_t finals =
        k == 1 ? g.final_letters : g.m_letters[static_cast<std::size_t>(chain.back())];
    for (int r = 0; r < alphabet.sigma(); ++r) {
      if (!(finals & (1u << r))) continue;
      u.push_back(alphabet.letter(r));
      out.push_back(AbsenceWitness{u, chain});
      u.pop_back();
    }
    return;
  }
  std::uint32_t allowed = level == 1 ? g.root_letters : g.m_letters[static_cast<std::size_t>(pos)];
  for (int r = 0; r < alphabet.sigma(); ++r) {
    if (!(allowed & (1u << r))) continue;
    int nxt = g.leftmost[static_cast<std::size_t>(level)][static_cast<std::size_t>(r)];
    u.push_back(alphabet.letter(r));
    chain.push_back(nxt);
    collect_chains(alphabet, g, k, level + 1, nxt, u, chain, out);
    chain.pop_back();
    u.pop_back();
  }
}

}  // namespace

std::vector<AbsenceWitness> absent_factors_structured(const Alphabet& alphabet,
                                                      std::string_view w, int k) {
  CandidateGraph g = candidate_graph(alphabet, w, k);
  std::vector<AbsenceWitness> out;
  std::string u;
  std::vector<int> chain;
  collect_chains(alphabet, g, k, 1, 0, u, chain, out);
  return out;
}

std::uint64_t deficiency_structured(const Alphabet& alphabet, std::string_view w, int k) {
  return candidate_graph(alphabet, w, k).h_root;
}

namespace {

bool predicate_C_impl(const Alphabet& alphabet, const CandidateGraph& g,
                      const CandidateGraph& g2, std::string_view u, int k) {
  if (k == 1)
    return ((g.final_letters & g2.final_letters) >> alphabet.rank(u[0])) & 1u;
  // Both chains are leftmost, hence unique; the shared-candidate condition
  // intersects the successor sets step by step.
  if (!(((g.root_letters & g2.root_letters) >> alphabet.rank(u[0])) & 1u)) return false;
  std::uint32_t allowed = ~0u;
  int pos = 0, pos2 = 0;
  for (int i = 1; i <= k - 1; ++i) {
    int r = alphabet.rank(u[static_cast<std::size_t>(i - 1)]);
    if (i > 1 && !((allowed >> r) & 1u)) return false;
    pos = g.leftmost[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    pos2 = g2.leftmost[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    allowed = g.m_letters[static_cast<std::size_t>(pos)] & g2.m_letters[static_cast<std::size_t>(pos2)];
  }
  return (allowed >> alphabet.rank(u[static_cast<std::size_t>(k - 1)])) & 1u;
}

}  // namespace

bool predicate_C(const Alphabet& alphabet, std::string_view u, std::string_view w,
                 std::string_view w2, int k) {
  alphabet.validate(u);
  if (static_cast<int>(u.size()) != k) throw std::invalid_argument("|u| must equal k");
  if (is_scattered_factor(alphabet, u, w))
    throw std::logic_error("u is a scattered factor of w; the predicate requires absence");
  CandidateGraph g = candidate_graph(alphabet, w, k);
  CandidateGraph g2 = candidate_graph(alphabet, w2, k);
  return predicate_C_impl(alphabet, g, g2, u, k);
}

bool congruent_structured(const Alphabet& alphabet, std::string_view w, std::string_view w2,
                          int k) {
  CandidateGraph g = candidate_graph(alphabet, w, k);
  CandidateGraph g2 = candidate_graph(alphabet, w2, k);
  if (g.h_root != g2.h_root) return false;
  std::vector<AbsenceWitness> absent1 = absent_factors_structured(alphabet, w, k);
  std::vector<AbsenceWitness> absent2 = absent_factors_structured(alphabet, w2, k);
  for (const auto& wit : absent1)
    if (!predicate_C_impl(alphabet, g, g2, wit.u, k)) return false;
  for (const auto& wit : absent2)
    if (!predicate_C_impl(alphabet, g2, g, wit.u, k)) return false;
  return true;
}

}  // namespace nuniv
