#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nuniv/alpha_beta.hpp"

using namespace nuniv;

TEST_CASE("alpha-beta factorization of aabcbccab") {
  Alphabet abc("abc");
  AlphaBetaFactorization fact = alpha_beta_factorize(abc, "aabcbccab", 3);
  CHECK(fact.alphas == std::vector<std::string>{"a", "bc", "b"});
  CHECK(fact.betas == std::vector<std::string>{"abc", "ca"});
  CHECK(fact.alpha_bounds == std::vector<std::pair<int, int>>{{1, 1}, {5, 6}, {9, 9}});
  CHECK(fact.beta_bounds == std::vector<std::pair<int, int>>{{2, 4}, {7, 8}});
}

TEST_CASE("alpha-beta requires iota = k-1") {
  Alphabet abc("abc");
  CHECK_THROWS_AS(alpha_beta_factorize(abc, "aabcbccab", 4), std::logic_error);
  CHECK_THROWS_AS(alpha_beta_factorize(abc, "ab", 3), std::logic_error);
}

TEST_CASE("alpha-beta invariants on the exhaustive range") {
  Alphabet abc("abc");
  for (int k = 2; k <= 3; ++k) {
    for_each_word(abc, 8, [&](const std::string& w) {
      ArchFactorization fwd = arch_factorize(abc, w);
      if (fwd.iota != k - 1) return;
      AlphaBetaFactorization fact = alpha_beta_factorize(abc, w, k);
      ArchFactorization bwd = arch_factorize(abc, reversed(w));
      std::string rebuilt;
      for (int i = 0; i < k - 1; ++i) {
        CHECK(fact.alphas[i] + fact.betas[i] ==
              (i < k - 1 ? fwd.arches[static_cast<std::size_t>(i)] : std::string()));
        rebuilt += fact.alphas[static_cast<std::size_t>(i)];
        rebuilt += fact.betas[static_cast<std::size_t>(i)];
      }
      rebuilt += fact.alphas.back();
      CHECK(rebuilt == w);
      CHECK(fact.alphas.back() == fwd.rest);
      CHECK(reversed(fact.alphas.front()) == bwd.rest);
      // ar_i(w^R) = (beta_{k-i} alpha_{k-i+1})^R
      for (int i = 1; i <= k - 1; ++i) {
        std::string expected = reversed(fact.betas[static_cast<std::size_t>(k - i - 1)] +
                                        fact.alphas[static_cast<std::size_t>(k - i)]);
        CHECK(bwd.arches[static_cast<std::size_t>(i - 1)] == expected);
      }
    });
  }
}

TEST_CASE("candidate graph of aabcbccab") {
  Alphabet abc("abc");
  CandidateGraph g = candidate_graph(abc, "aabcbccab", 3);
  CHECK(g.root_positions == std::vector<int>{3, 4});
  CHECK(g.m_next[3] == std::vector<int>{8});
  CHECK(g.m_next[4] == std::vector<int>{8});
  CHECK(g.h[8] == 2);
  CHECK(g.h_root == 4);
}

TEST_CASE("structured absent factors of aabcbccab") {
  Alphabet abc("abc");
  std::vector<std::string> absent;
  for (const auto& witness : absent_factors_structured(abc, "aabcbccab", 3))
    absent.push_back(witness.u);
  CHECK(absent == std::vector<std::string>{"baa", "bac", "caa", "cac"});
  CHECK(deficiency_structured(abc, "aabcbccab", 3) == 4);
  CHECK(deficiency(abc, "aabcbccab", 3) == 4);
}

TEST_CASE("structured set equals brute complement on the exhaustive range") {
  Alphabet ab("ab"), abc("abc");
  for (const Alphabet& alphabet : {ab, abc}) {
    int max_len = alphabet.sigma() == 2 ? 9 : 7;
    for (int k = 1; k <= 4; ++k) {
      for_each_word(alphabet, max_len, [&](const std::string& w) {
        if (arch_factorize(alphabet, w).iota != k - 1) return;
        std::vector<std::string> structured;
        for (const auto& witness : absent_factors_structured(alphabet, w, k))
          structured.push_back(witness.u);
        CHECK(structured == absent_factors_brute(alphabet, w, k));
        CHECK(deficiency_structured(alphabet, w, k) == deficiency(alphabet, w, k));
      });
    }
  }
}

TEST_CASE("chains spell their witnesses at increasing positions") {
  Alphabet abc("abc");
  for_each_word(abc, 7, [&](const std::string& w) {
    if (arch_factorize(abc, w).iota != 2) return;
    for (const auto& witness : absent_factors_structured(abc, w, 3)) {
      REQUIRE(witness.chain.size() == 2);
      CHECK(witness.chain[0] < witness.chain[1]);
      for (std::size_t i = 0; i < witness.chain.size(); ++i)
        CHECK(w[static_cast<std::size_t>(witness.chain[i] - 1)] == witness.u[i]);
    }
  });
}

TEST_CASE("predicate_C demands absence") {
  Alphabet abc("abc");
  CHECK_THROWS_AS(predicate_C(abc, "abc", "aabcbccab", "aabcbccab", 3), std::logic_error);
  CHECK(predicate_C(abc, "baa", "aabcbccab", "aabcbccab", 3));
}

TEST_CASE("structured congruence") {
  Alphabet abc("abc");
  CHECK(congruent_structured(abc, "aabcbccab", "aabcbccab", 3));
  CHECK_FALSE(congruent_structured(abc, "aabcbccab", "aabcbcab", 3));
  // agrees with the signature oracle across an exhaustive slice
  std::vector<std::string> universal;
  for_each_word(abc, 6, [&](const std::string& w) {
    if (arch_factorize(abc, w).iota == 2) universal.push_back(w);
  });
  for (const std::string& w : universal)
    for (const std::string& w2 : universal)
      CHECK(congruent_structured(abc, w, w2, 3) ==
            simon_congruent(abc, w, w2, 3, CongruenceMode::exact_k));
}
