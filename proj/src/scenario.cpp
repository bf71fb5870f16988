#include "shapalloc/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "shapalloc/errors.hpp"

namespace shapalloc {
namespace {

using nlohmann::json;

std::string child(const std::string& parent, std::string_view key) {
  std::string escaped;
  for (const char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return parent + "/" + escaped;
}

std::string child(const std::string& parent, std::size_t index) { return parent + "/" + std::to_string(index); }

const json& require(const json& object, const std::string& at, std::string_view key) {
  const auto it = object.find(key);
  if (it == object.end()) throw ScenarioError(child(at, key), "missing required field");
  return *it;
}

void expect_object(const json& node, const std::string& at) {
  if (!node.is_object()) throw ScenarioError(at.empty() ? "/" : at, "expected an object");
}

void expect_array(const json& node, const std::string& at) {
  if (!node.is_array()) throw ScenarioError(at, "expected an array");
}

void reject_unknown(const json& object, const std::string& at, std::initializer_list<std::string_view> known) {
  for (const auto& item : object.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw ScenarioError(child(at, item.key()), "unknown field");
    }
  }
}

std::string read_string(const json& node, const std::string& at) {
  if (!node.is_string()) throw ScenarioError(at, "expected a string");
  return node.get<std::string>();
}

Rational read_number(const json& node, const std::string& at) {
  if (node.is_number_integer()) {
    return node.is_number_unsigned() ? Rational(Integer(node.get<std::uint64_t>()))
                                     : Rational(Integer(node.get<std::int64_t>()));
  }
  if (node.is_number_float()) {
    throw ScenarioError(at, "floating-point literal is not exact; quote it as a decimal string");
  }
  if (!node.is_string()) throw ScenarioError(at, "expected a decimal string");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const DomainError& e) {
    throw ScenarioError(at, e.what());
  }
}

std::size_t player_index(const std::vector<std::string>& players, const std::string& id, const std::string& at) {
  const auto it = std::find(players.begin(), players.end(), id);
  if (it == players.end()) throw ScenarioError(at, "unknown player '" + id + "'");
  return static_cast<std::size_t>(it - players.begin());
}

RationalMatrix read_matrix(const json& node, const std::string& at, std::size_t n) {
  expect_array(node, at);
  if (node.size() != n) {
    throw ScenarioError(at, "expected " + std::to_string(n) + " rows, got " + std::to_string(node.size()));
  }
  RationalMatrix out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_at = child(at, i);
    expect_array(node[i], row_at);
    if (node[i].size() != n) {
      throw ScenarioError(row_at, "expected " + std::to_string(n) + " entries, got " + std::to_string(node[i].size()));
    }
    std::vector<Rational> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(read_number(node[i][j], child(row_at, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Rational> read_player_map(const json& node, const std::string& at,
                                      const std::vector<std::string>& players) {
  expect_object(node, at);
  std::vector<std::optional<Rational>> slots(players.size());
  for (const auto& item : node.items()) {
    const auto key_at = child(at, item.key());
    slots[player_index(players, item.key(), key_at)] = read_number(item.value(), key_at);
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (!slots[i]) throw ScenarioError(child(at, players[i]), "missing value for player '" + players[i] + "'");
    out.push_back(*slots[i]);
  }
  return out;
}

AhpSpec read_ahp(const json& node, const std::string& at, const std::vector<std::string>& players) {
  expect_object(node, at);
  reject_unknown(node, at, {"criteria", "criteria_matrix", "alternatives"});
  AhpSpec spec;

  const auto criteria_at = child(at, "criteria");
  const auto& criteria = require(node, at, "criteria");
  expect_array(criteria, criteria_at);
  if (criteria.empty()) throw ScenarioError(criteria_at, "at least one criterion is required");
  std::set<std::string> seen;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto label = read_string(criteria[k], child(criteria_at, k));
    if (label.empty()) throw ScenarioError(child(criteria_at, k), "criterion label must be non-empty");
    if (!seen.insert(label).second) throw ScenarioError(child(criteria_at, k), "duplicate criterion '" + label + "'");
    spec.criteria.push_back(std::move(label));
  }

  spec.criteria_matrix =
      read_matrix(require(node, at, "criteria_matrix"), child(at, "criteria_matrix"), spec.criteria.size());

  const auto alt_at = child(at, "alternatives");
  const auto& alternatives = require(node, at, "alternatives");
  expect_object(alternatives, alt_at);
  for (const auto& item : alternatives.items()) {
    if (!seen.count(item.key())) throw ScenarioError(child(alt_at, item.key()), "unknown criterion '" + item.key() + "'");
  }
  for (const auto& label : spec.criteria) {
    const auto entry_at = child(alt_at, label);
    const auto& entry = require(alternatives, alt_at, label);
    expect_object(entry, entry_at);
    reject_unknown(entry, entry_at, {"matrix", "scores"});
    const bool has_matrix = entry.contains("matrix");
    const bool has_scores = entry.contains("scores");
    if (has_matrix == has_scores) throw ScenarioError(entry_at, "give exactly one of 'matrix' or 'scores'");
    if (has_matrix) {
      spec.alternatives.emplace_back(read_matrix(entry["matrix"], child(entry_at, "matrix"), players.size()));
    } else {
      spec.alternatives.emplace_back(DirectScores{read_player_map(entry["scores"], child(entry_at, "scores"), players)});
    }
  }
  return spec;
}

std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json number_json(const Rational& value) { return to_exact_string(value); }

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(number_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json player_map_json(const std::vector<std::string>& players, const std::vector<Rational>& values) {
  json out = json::object();
  for (std::size_t i = 0; i < players.size(); ++i) out[players[i]] = number_json(values[i]);
  return out;
}

std::vector<std::vector<double>> to_doubles(const RationalMatrix& m) {
  std::vector<std::vector<double>> out;
  for (const auto& row : m) {
    std::vector<double> r;
    for (const auto& x : row) r.push_back(to_double(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioError(locate(text, e.byte), "syntax error: " + std::string(e.what()));
  }
  const std::string at;
  expect_object(root, at);
  reject_unknown(root, at, {"players", "coalitions", "factors", "ahp", "mode", "normalize_factors"});

  ScenarioFile out;
  const auto& players = require(root, at, "players");
  expect_array(players, "/players");
  if (players.empty()) throw ScenarioError("/players", "at least one player is required");
  if (players.size() > kMaxPlayers) throw ScenarioError("/players", "too many players");
  for (std::size_t i = 0; i < players.size(); ++i) {
    auto id = read_string(players[i], child("/players", i));
    if (id.empty()) throw ScenarioError(child("/players", i), "player identifier must be non-empty");
    if (std::find(out.players.begin(), out.players.end(), id) != out.players.end()) {
      throw ScenarioError(child("/players", i), "duplicate player '" + id + "'");
    }
    out.players.push_back(std::move(id));
  }

  const auto& coalitions = require(root, at, "coalitions");
  expect_array(coalitions, "/coalitions");
  std::vector<std::pair<std::uint64_t, CoalitionValue>> entries;
  std::set<std::uint64_t> keys;
  for (std::size_t c = 0; c < coalitions.size(); ++c) {
    const auto entry_at = child("/coalitions", c);
    const auto& entry = coalitions[c];
    expect_object(entry, entry_at);
    reject_unknown(entry, entry_at, {"members", "value"});
    const auto members_at = child(entry_at, "members");
    const auto& members = require(entry, entry_at, "members");
    expect_array(members, members_at);
    if (members.empty()) throw ScenarioError(members_at, "coalition must have at least one member");
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto member_at = child(members_at, k);
      const auto index = player_index(out.players, read_string(members[k], member_at), member_at);
      const std::uint64_t bit = std::uint64_t{1} << index;
      if (mask & bit) throw ScenarioError(member_at, "player '" + out.players[index] + "' listed twice");
      mask |= bit;
    }
    if (!keys.insert(mask).second) {
      throw ScenarioError(members_at, "duplicate coalition " + describe(Coalition(mask), PlayerSet(out.players)));
    }
    CoalitionValue value;
    for (const auto i : Coalition(mask).members()) value.members.push_back(out.players[i]);
    value.value = read_number(require(entry, entry_at, "value"), child(entry_at, "value"));
    entries.emplace_back(mask, std::move(value));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& e : entries) out.coalitions.push_back(std::move(e.second));

  if (root.contains("factors") && root.contains("ahp")) {
    throw ScenarioError("/factors", "give at most one of 'factors' and 'ahp'");
  }
  if (root.contains("factors")) out.factors = read_player_map(root["factors"], "/factors", out.players);
  if (root.contains("ahp")) out.ahp = read_ahp(root["ahp"], "/ahp", out.players);
  if (root.contains("mode")) {
    const auto text_mode = read_string(root["mode"], "/mode");
    out.mode = parse_adjust_mode(text_mode);
    if (!out.mode) throw ScenarioError("/mode", "mode must be \"eq3\" or \"grand\", got \"" + text_mode + "\"");
  }
  if (root.contains("normalize_factors")) {
    if (!root["normalize_factors"].is_boolean()) throw ScenarioError("/normalize_factors", "expected a boolean");
    out.normalize_factors = root["normalize_factors"].get<bool>();
  }
  return out;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path.string(), "cannot open scenario file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const ScenarioFile& scenario) {
  // ordered_json keeps the documented key order.
  nlohmann::ordered_json root;
  root["players"] = scenario.players;
  auto coalitions = nlohmann::ordered_json::array();
  for (const auto& c : scenario.coalitions) {
    nlohmann::ordered_json entry;
    entry["members"] = c.members;
    entry["value"] = to_exact_string(c.value);
    coalitions.push_back(std::move(entry));
  }
  root["coalitions"] = std::move(coalitions);
  if (scenario.factors) root["factors"] = player_map_json(scenario.players, *scenario.factors);
  if (scenario.ahp) {
    nlohmann::ordered_json block;
    block["criteria"] = scenario.ahp->criteria;
    block["criteria_matrix"] = matrix_json(scenario.ahp->criteria_matrix);
    nlohmann::ordered_json alternatives = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < scenario.ahp->criteria.size(); ++k) {
      const auto& source = scenario.ahp->alternatives[k];
      nlohmann::ordered_json entry;
      if (const auto* m = std::get_if<RationalMatrix>(&source)) {
        entry["matrix"] = matrix_json(*m);
      } else {
        entry["scores"] = player_map_json(scenario.players, std::get<DirectScores>(source).scores);
      }
      alternatives[scenario.ahp->criteria[k]] = std::move(entry);
    }
    block["alternatives"] = std::move(alternatives);
    root["ahp"] = std::move(block);
  }
  if (scenario.mode) root["mode"] = std::string(to_string(*scenario.mode));
  if (scenario.normalize_factors) root["normalize_factors"] = *scenario.normalize_factors;
  return root.dump(2) + "\n";
}

PlayerSet player_set(const ScenarioFile& scenario) { return PlayerSet(scenario.players); }

Coalition coalition_of(const CoalitionValue& entry, const PlayerSet& players) {
  Coalition c;
  for (const auto& id : entry.members) {
    const auto i = players.index_of(id);
    if (!i) throw DomainError("unknown player '" + id + "'");
    c = c.with(*i);
  }
  return c;
}

CharacteristicFunction build_game(const ScenarioFile& scenario) {
  PlayerSet players = player_set(scenario);
  std::map<Coalition, Rational> values;
  for (const auto& entry : scenario.coalitions) values.emplace(coalition_of(entry, players), entry.value);
  return CharacteristicFunction::from_values(std::move(players), values);
}

ahp::CriteriaHierarchy build_hierarchy(const ScenarioFile& scenario, ahp::WeightMethod method) {
  if (!scenario.ahp) throw DomainError("scenario has no 'ahp' block");
  const auto& spec = *scenario.ahp;

  const auto criteria_matrix = ahp::ComparisonMatrix::from_rows(spec.criteria, to_doubles(spec.criteria_matrix));
  auto criteria = ahp::principal_weights(criteria_matrix, method);

  ahp::CriteriaHierarchy out{std::move(criteria.weights), criteria.consistency, {}};
  for (std::size_t k = 0; k < spec.criteria.size(); ++k) {
    const auto& source = spec.alternatives[k];
    if (const auto* m = std::get_if<RationalMatrix>(&source)) {
      auto result = ahp::principal_weights(ahp::ComparisonMatrix::from_rows(scenario.players, to_doubles(*m)), method);
      out.alternatives.push_back({spec.criteria[k], std::move(result.weights), result.consistency});
    } else {
      std::vector<double> w;
      for (const auto& x : std::get<DirectScores>(source).scores) w.push_back(to_double(x));
      out.alternatives.push_back({spec.criteria[k], ahp::make_weight_vector(scenario.players, std::move(w)), std::nullopt});
    }
  }
  return out;
}

}  // namespace shapalloc
