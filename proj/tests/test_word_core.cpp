#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nuniv/word_core.hpp"

using namespace nuniv;

TEST_CASE("alphabet order and validation") {
  Alphabet abc("abc");
  CHECK(abc.sigma() == 3);
  CHECK(abc.rank('a') == 0);
  CHECK(abc.rank('z') == -1);
  CHECK_THROWS_AS(abc.validate("abz"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aba"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aB"), std::invalid_argument);

  Alphabet bac("bac");  // custom order: b < a < c
  CHECK(bac.lex_less("ba", "ab"));
  CHECK_FALSE(bac.lex_less("ab", "ba"));
  CHECK(bac.word_without('a') == "bc");
  CHECK(bac.word_of_mask(bac.full_mask()) == "bac");
}

TEST_CASE("condense and reversed") {
  CHECK(condense("aabbbca") == "abca");
  CHECK(condense("") == "");
  CHECK(reversed("abc") == "cba");
}

TEST_CASE("scattered factor membership, both routes agree") {
  Alphabet ab("ab");
  CHECK(is_scattered_factor(ab, "ab", "aabb"));
  CHECK_FALSE(is_scattered_factor(ab, "ba", "aabb"));
  CHECK(is_scattered_factor(ab, "", "abab"));
  for_each_word(ab, 6, [&](const std::string& w) {
    NextOccurrenceTable table(ab, w);
    for_each_word(ab, 4, [&](const std::string& u) {
      CHECK(is_scattered_factor(ab, u, w) == is_scattered_factor(table, u));
    });
  });
}

TEST_CASE("scatfact set and absent complement") {
  Alphabet abc("abc");
  auto absent = absent_factors_brute(abc, "acbba", 2);
  CHECK(absent == std::vector<std::string>{"bc", "cc"});
  auto present = scatfact_set(abc, "acbba", 2);
  CHECK(present.size() == 7);
  CHECK(std::is_sorted(present.begin(), present.end()));
  CHECK_THROWS_AS(scatfact_set(abc, "abc", 20, 100), capacity_error);
}

TEST_CASE("two counting routes match the set size") {
  Alphabet abc("abc");
  for (int k = 1; k <= 4; ++k) {
    for_each_word(abc, 6, [&](const std::string& w) {
      std::uint64_t exact = count_distinct_subsequences(abc, w, k);
      CHECK(exact == scatfact_set(abc, w, k).size());
      CHECK(exact == count_distinct_subsequences_capped(abc, w, k, 1 << 20));
      CHECK(count_distinct_subsequences_capped(abc, w, k, 3) == std::min<std::uint64_t>(exact, 3));
    });
  }
}

TEST_CASE("pow_checked overflow") {
  CHECK(pow_checked(3, 4) == 81);
  CHECK_THROWS_AS(pow_checked(10, 30), capacity_error);
}

TEST_CASE("arch factorization") {
  Alphabet abc("abc");
  ArchFactorization fwd = arch_factorize(abc, "accbbacab");
  CHECK(fwd.arches == std::vector<std::string>{"accb", "bac"});
  CHECK(fwd.boundaries == std::vector<int>{4, 7});
  CHECK(fwd.rest == "ab");
  CHECK(fwd.iota == 2);
  CHECK(fwd.modus == "bc");
  CHECK(missing_rest_letter(abc, fwd) == 'c');

  ArchFactorization golden = arch_factorize(abc, "aabcbccab");
  CHECK(golden.arches == std::vector<std::string>{"aabc", "bcca"});
  CHECK(golden.rest == "b");

  Alphabet a("a");
  CHECK(arch_factorize(a, "aaa").iota == 3);
  CHECK(arch_factorize(abc, "").iota == 0);
}

TEST_CASE("arch minimality and reversal invariance of iota") {
  Alphabet abc("abc");
  for_each_word(abc, 7, [&](const std::string& w) {
    ArchFactorization fwd = arch_factorize(abc, w);
    for (const std::string& arch : fwd.arches) {
      CHECK(abc.alph_mask(arch) == abc.full_mask());
      CHECK(abc.alph_mask(arch.substr(0, arch.size() - 1)) != abc.full_mask());
    }
    CHECK(fwd.iota == arch_factorize(abc, reversed(w)).iota);
    CHECK(abc.alph_mask(fwd.rest) != abc.full_mask());
  });
}

TEST_CASE("perfect universality") {
  Alphabet ab("ab");
  CHECK(is_perfectly_universal(ab, "", 0));
  CHECK_FALSE(is_perfectly_universal(ab, "a", 0));
  CHECK(is_perfectly_universal(ab, "ab", 1));
  CHECK(is_perfectly_universal(ab, "ba", 1));
  // forward-only: the arches must cover the word, its reversal may not
  CHECK(is_perfectly_universal(ab, "aab", 1));
  CHECK_FALSE(is_perfectly_universal(ab, "baa", 1));
  CHECK_FALSE(is_perfectly_universal(ab, "abab", 1));
  CHECK(is_perfectly_universal(ab, "abab", 2));
}

TEST_CASE("simon congruence at exact level and up to level") {
  Alphabet abc("abc");
  CHECK_FALSE(simon_congruent(abc, "aabcbccab", "aabcbcab", 3));
  CHECK(simon_congruent(abc, "abc", "abc", 3));
  // Exact-2 sets of aab and aaab agree ({aa, ab}); level 3 separates them.
  CHECK(simon_congruent(abc, "aab", "aaab", 2, CongruenceMode::exact_k));
  CHECK_FALSE(simon_congruent(abc, "aab", "aaab", 3, CongruenceMode::up_to_k));
}

TEST_CASE("deficiency") {
  Alphabet ab("ab");
  CHECK(deficiency(ab, "abaabb", 3) == 1);
  CHECK(deficiency(ab, "aabbaaba", 4) != 1);
  CHECK(deficiency(ab, "a", 2) == 4);
  Alphabet a("a");
  CHECK(deficiency(a, "aaa", 3) == 0);
  CHECK(deficiency(a, "aa", 3) == 1);
}
