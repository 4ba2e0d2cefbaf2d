#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nuniv/extremes.hpp"

using namespace nuniv;

TEST_CASE("classification tags") {
  Alphabet ab("ab"), abc("abc");

  CHECK(classify_extreme(ab, "a", 2).tag == ExtremeTag::all_absent);
  CHECK(classify_extreme(ab, "", 1).tag == ExtremeTag::all_absent);

  CHECK(classify_extreme(ab, "aaa", 2).tag == ExtremeTag::single_present);
  CHECK(classify_extreme(abc, "bbb", 3).tag == ExtremeTag::single_present);

  ExtremeClassification two = classify_extreme(ab, "aabb", 3);
  CHECK(two.tag == ExtremeTag::two_present);
  CHECK(two.x == 'a');
  CHECK(two.y == 'b');
  CHECK(two.p == 2);
  CHECK(two.q == 2);

  CHECK(classify_extreme(ab, "abab", 2).tag == ExtremeTag::none);
  CHECK(std::string(to_string(ExtremeTag::two_present)) == "two-present");
}

TEST_CASE("tags agree with the exact count everywhere") {
  Alphabet ab("ab");
  for (int k = 1; k <= 4; ++k) {
    for_each_word(ab, 8, [&](const std::string& w) {
      std::uint64_t count = count_distinct_subsequences(ab, w, k);
      ExtremeTag tag = classify_extreme(ab, w, k).tag;
      if (count == 0) CHECK(tag == ExtremeTag::all_absent);
      else if (count == 1) CHECK(tag == ExtremeTag::single_present);
      else if (count == 2) CHECK(tag == ExtremeTag::two_present);
      else CHECK(tag == ExtremeTag::none);
    });
  }
}

TEST_CASE("two-present words split into exactly two blocks") {
  Alphabet abc("abc");
  for (int k = 2; k <= 3; ++k) {
    for_each_word(abc, 7, [&](const std::string& w) {
      ExtremeClassification cls = classify_extreme(abc, w, k);
      if (cls.tag != ExtremeTag::two_present) return;
      CHECK(cls.p >= 1);
      CHECK(cls.q >= 1);
      CHECK(std::string(static_cast<std::size_t>(cls.p), cls.x) +
                std::string(static_cast<std::size_t>(cls.q), cls.y) ==
            w);
    });
  }
}

TEST_CASE("deficiency-two structure") {
  Alphabet abc("abc"), ab("ab");
  // acbba misses exactly bc and cc at k = 2.
  REQUIRE(deficiency(abc, "acbba", 2) == 2);
  DeficiencyTwoReport report = deficiency_two_check(abc, "acbba", 2);
  CHECK(report.iota_ok);
  CHECK(report.branch == 2);
  CHECK(report.holds);

  CHECK_THROWS_AS(deficiency_two_check(ab, "abab", 2), std::logic_error);
  CHECK_THROWS_AS(deficiency_two_check(abc, "abc", 2), std::logic_error);
}
