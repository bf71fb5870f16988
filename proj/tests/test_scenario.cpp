#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "shapalloc/errors.hpp"
#include "shapalloc/scenario.hpp"

using namespace shapalloc;

namespace {

const std::filesystem::path kScenarios = SHAPALLOC_SCENARIO_DIR;

std::string locus_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.locus();
  }
  return "<parsed>";
}

std::string message_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  return "<parsed>";
}

}  // namespace

TEST_CASE("bundled case-study scenario") {
  const auto s = load_scenario(kScenarios / "paper_case.scenario");
  CHECK(s.players == std::vector<std::string>{"A", "B", "C"});
  REQUIRE(s.coalitions.size() == 7);
  // Canonical order is by coalition mask: A, B, AB, C, AC, BC, ABC.
  const std::vector<long> values{1000, 500, 2000, 300, 1500, 1200, 3000};
  for (std::size_t k = 0; k < 7; ++k) CHECK(s.coalitions[k].value == values[k]);
  CHECK(s.coalitions[2].members == std::vector<std::string>{"A", "B"});
  REQUIRE(s.factors.has_value());
  CHECK((*s.factors)[0] == parse_decimal("0.6648"));
  CHECK(s.mode == AdjustMode::kPerCoalition);

  const auto game = build_game(s);
  CHECK(game.grand_value() == 3000);
  CHECK(game.value(Coalition(0b110)) == 1200);
}

TEST_CASE("member order does not matter") {
  const auto s = parse_scenario(R"({"players":["A","B"],"coalitions":[
      {"members":["B","A"],"value":"3"},{"members":["B"],"value":"1"},{"members":["A"],"value":2}]})");
  CHECK(s.coalitions[2].members == std::vector<std::string>{"A", "B"});
  CHECK(s.coalitions[0].value == 2);
}

TEST_CASE("validation errors carry a locus") {
  CHECK(locus_of(R"({"players":[],"coalitions":[]})") == "/players");
  CHECK(locus_of(R"({"coalitions":[]})") == "/players");
  CHECK(locus_of(R"({"players":["A"]})") == "/coalitions");

  const auto unknown = R"({"players":["A","B","C"],"coalitions":[{"members":["A","D"],"value":"1"}]})";
  CHECK(locus_of(unknown) == "/coalitions/0/members/1");
  CHECK(message_of(unknown).find("'D'") != std::string::npos);

  CHECK(locus_of(R"({"players":["A","B"],"coalitions":[{"members":["A","B"],"value":"1"},
      {"members":["B","A"],"value":"2"}]})") == "/coalitions/1/members");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[{"members":["A","A"],"value":"1"}]})") ==
        "/coalitions/0/members/1");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[{"members":[],"value":"1"}]})") == "/coalitions/0/members");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[{"members":["A"],"value":"1,5"}]})") == "/coalitions/0/value");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[{"members":["A"],"value":1.5}]})") == "/coalitions/0/value");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[{"members":["A"]}]})") == "/coalitions/0/value");
  CHECK(locus_of(R"({"players":["A","A"],"coalitions":[]})") == "/players/1");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[],"colour":"red"})") == "/colour");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[],"mode":"fancy"})") == "/mode");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[],"normalize_factors":"yes"})") == "/normalize_factors");
  CHECK(locus_of(R"({"players":["A","B"],"coalitions":[],"factors":{"A":"0.5"}})") == "/factors/B");
  CHECK(locus_of(R"({"players":["A"],"coalitions":[],"factors":{"A":"1"},
      "ahp":{"criteria":["R"],"criteria_matrix":[["1"]],"alternatives":{"R":{"scores":{"A":"1"}}}}})") == "/factors");
  CHECK(locus_of("{\"players\": [\"A\"],\n  \"coalitions\": [,]}") == "line 2, column 18");
  CHECK(locus_of("[1, 2]") == "/");
}

TEST_CASE("ahp block") {
  const auto s = load_scenario(kScenarios / "four_firm.scenario");
  REQUIRE(s.ahp.has_value());
  CHECK(s.ahp->criteria.size() == 3);
  CHECK(std::holds_alternative<RationalMatrix>(s.ahp->alternatives[0]));
  CHECK(std::holds_alternative<DirectScores>(s.ahp->alternatives[2]));
  CHECK(s.ahp->criteria_matrix[1][0] == Rational(1, 3));
  CHECK(s.mode == AdjustMode::kGrandCoalition);
  CHECK(s.normalize_factors == true);

  const auto h = build_hierarchy(s);
  CHECK(h.criteria.labels == s.ahp->criteria);
  CHECK(h.criteria_consistency->pass);
  REQUIRE(h.alternatives.size() == 3);
  CHECK(h.alternatives[0].consistency.has_value());
  CHECK_FALSE(h.alternatives[2].consistency.has_value());
  CHECK(h.alternatives[2].scores.w[2] == doctest::Approx(0.3));

  const auto base = R"({"players":["A","B"],"coalitions":[],"ahp":{"criteria":["R1","R2"],
      "criteria_matrix":[["1","2"],["1/2","1"]],"alternatives":{)";
  CHECK(locus_of(std::string(base) + R"("R1":{"scores":{"A":"1","B":"0"}}}}})") == "/ahp/alternatives/R2");
  CHECK(locus_of(std::string(base) + R"("R1":{"scores":{"A":"1","B":"0"}},"R2":{},"R3":{}}}})") ==
        "/ahp/alternatives/R3");
  CHECK(locus_of(std::string(base) + R"("R1":{},"R2":{}}}})") == "/ahp/alternatives/R1");
  CHECK(locus_of(std::string(base) + R"("R1":{"matrix":[["1"]]},"R2":{}}}})") == "/ahp/alternatives/R1/matrix");
}

TEST_CASE("round trip over the bundled corpus") {
  for (const auto& entry : std::filesystem::directory_iterator(kScenarios)) {
    if (entry.path().extension() != ".scenario") continue;
    CAPTURE(entry.path().filename().string());
    const auto s = load_scenario(entry.path());
    const auto text = serialize_scenario(s);
    CHECK(parse_scenario(text) == s);
    CHECK(serialize_scenario(parse_scenario(text)) == text);
  }
}

TEST_CASE("property: round trip over random scenarios") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    ScenarioFile s;
    s.players = oracle::player_names(n);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      CoalitionValue c;
      for (const auto i : Coalition(m).members()) c.members.push_back(s.players[i]);
      c.value = oracle::random_value(rng) / Rational(static_cast<long>(1 + trial % 7));
      s.coalitions.push_back(c);
    }
    if (trial % 3 == 0) s.factors = oracle::random_factors(rng, n);
    if (trial % 3 == 1) {
      AhpSpec spec;
      spec.criteria = {"k1", "k2"};
      spec.criteria_matrix = {{1, Rational(1, 3)}, {3, 1}};
      RationalMatrix m(n, std::vector<Rational>(n, Rational(1)));
      spec.alternatives.emplace_back(m);
      spec.alternatives.emplace_back(DirectScores{oracle::random_factors(rng, n)});
      s.ahp = spec;
    }
    if (trial % 2) s.mode = AdjustMode::kGrandCoalition;
    if (trial % 4 == 0) s.normalize_factors = trial % 8 == 0;
    CHECK(parse_scenario(serialize_scenario(s)) == s);
  }
}

TEST_CASE("incomplete scenario games") {
  const auto s = parse_scenario(R"({"players":["A","B"],"coalitions":[{"members":["A"],"value":"1"}]})");
  CHECK_THROWS_AS(build_game(s), IncompleteGameError);
}
