#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "nuniv/nearly.hpp"
#include "nuniv/oracle_lab.hpp"

using namespace nuniv;

TEST_CASE("enumerate_nuniv matches a direct filter") {
  Alphabet ab("ab");
  std::vector<std::string> enumerated;
  enumerate_nuniv(ab, 1, 2, 4, kDefaultBudget,
                  [&](const std::string& w) { enumerated.push_back(w); });
  std::vector<std::string> expected;
  for_each_word(ab, 4, [&](const std::string& w) {
    if (deficiency(ab, w, 2) == 1) expected.push_back(w);
  });
  CHECK(enumerated == expected);
  CHECK_FALSE(enumerated.empty());
  CHECK_THROWS_AS(enumerate_nuniv(ab, 1, 2, 63, 1000, [](const std::string&) {}),
                  capacity_error);
}

TEST_CASE("census of nearly 2-universal binary words") {
  Alphabet ab("ab");
  CensusReport report = census(ab, 1, 2, 7);
  CHECK(report.class_count == 4);
  CHECK(report.stabilized);
  REQUIRE(report.representatives.size() == 4);
  std::vector<std::string> absents;
  for (const std::string& rep : report.representatives)
    absents.push_back(absent_factor_nearly(ab, rep, 2));
  std::sort(absents.begin(), absents.end());
  CHECK(absents == std::vector<std::string>{"aa", "ab", "ba", "bb"});
  REQUIRE(report.formula_comparison.has_value());
  CHECK(report.formula_comparison->claim == "nearly-class-count");
  CHECK(report.formula_comparison->claimed == 4);
  CHECK(report.formula_comparison->match);
}

TEST_CASE("census stabilization flag goes false when the range is too short") {
  Alphabet ab("ab");
  // At max_len = 3 the length-3 representatives are brand new.
  CHECK_FALSE(census(ab, 1, 2, 3).stabilized);
}

TEST_CASE("census json and csv") {
  Alphabet ab("ab");
  CensusReport report = census(ab, 3, 2, 5);  // deficiency 3 = single present factor
  nlohmann::json j = nlohmann::json::parse(census_json(report));
  CHECK(j["params"]["alphabet"] == "ab");
  CHECK(j["params"]["mode"] == "exact-k");
  CHECK(j["class_count"] == 4);
  CHECK(j["formula_comparison"]["claim"] == "single-present-count");
  CHECK(j["representatives"].size() == 4);

  std::string csv = census_csv(report);
  CHECK(csv.find("class_index,representative,length") != std::string::npos);
  CHECK(csv.find("single-present-count") != std::string::npos);

  write_census_report(report, "census_unit_tmp");
  std::ifstream json_in("census_unit_tmp.json"), csv_in("census_unit_tmp.csv");
  CHECK(json_in.good());
  CHECK(csv_in.good());
  nlohmann::json round_trip;
  json_in >> round_trip;
  CHECK(round_trip["class_count"] == 4);
  json_in.close();
  csv_in.close();
  std::remove("census_unit_tmp.json");
  std::remove("census_unit_tmp.csv");
}

TEST_CASE("up-to-k census separates classes the exact-k view merges") {
  Alphabet ab("ab");
  CensusReport exact = census(ab, 1, 2, 6, CongruenceMode::exact_k);
  CensusReport upto = census(ab, 1, 2, 6, CongruenceMode::up_to_k);
  CHECK(upto.class_count >= exact.class_count);
}

TEST_CASE("claim registry") {
  std::vector<std::string> ids = claim_ids();
  CHECK(ids.size() == 23);
  for (const char* id : {"decision-linear-equiv", "witness-construction", "two-present-count",
                         "structured-congruence", "shared-absence-chains"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_THROWS_AS(verify_claims({"no-such-claim"}), std::invalid_argument);
}

TEST_CASE("spot claims at reduced scale") {
  ClaimScale scale;
  scale.binary_max_len = 7;
  scale.ternary_max_len = 5;
  scale.max_k = 3;
  auto results = verify_claims({"nearly-implies-structure", "nearly-absent-formula",
                                "decision-linear-equiv", "structured-absent-equiv",
                                "all-absent-class", "two-present-structure"},
                               scale);
  for (const ClaimResult& result : results) {
    INFO(result.id);
    CHECK(result.status == ClaimStatus::pass);
    CHECK(result.cases_checked > 0);
    CHECK(result.mismatches == 0);
  }

  auto compare = verify_claims({"two-present-count"}, scale);
  REQUIRE(compare.size() == 1);
  CHECK(compare[0].status == ClaimStatus::compare);
  CHECK_FALSE(compare[0].detail.empty());

  nlohmann::json j = nlohmann::json::parse(claims_json(results));
  CHECK(j.size() == results.size());
  CHECK(j[0]["id"] == "nearly-implies-structure");
  CHECK(j[0]["status"] == "pass");
}
