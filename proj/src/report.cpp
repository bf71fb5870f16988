#include "shapalloc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace shapalloc {
namespace {

using Json = nlohmann::ordered_json;

std::string show(const Rational& x) { return to_fixed(x, kDisplayPlaces); }

std::string show(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", kDisplayPlaces, x);
  return buf;
}

std::string signed_show(const Rational& x) { return (x > 0 ? "+" : "") + show(x); }

Json exact(const Rational& x) { return Json{{"exact", to_exact_string(x)}, {"display", show(x)}}; }

// Column-aligned text table; the first column is left-aligned, the rest
// right-aligned.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c > 0) line += "  ";
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string violation_text(const SuperadditivityViolation& v, const PlayerSet& players) {
  return "v(" + describe(v.first | v.second, players) + ") = " + show(v.union_value) + " < v(" +
         describe(v.first, players) + ") + v(" + describe(v.second, players) + ") = " + show(v.sum_value);
}

Json validation_json(const ValidationReport& report, const PlayerSet& players) {
  Json list = Json::array();
  for (const auto& v : report.violations) {
    list.push_back(Json{{"first", describe(v.first, players)},
                        {"second", describe(v.second, players)},
                        {"union_value", exact(v.union_value)},
                        {"sum_value", exact(v.sum_value)}});
  }
  return Json{{"superadditive", report.ok()}, {"violations", std::move(list)}};
}

std::string validation_table(const ValidationReport& report, const PlayerSet& players) {
  if (report.ok()) return "validation: no superadditivity violations\n";
  std::string out = "validation: " + std::to_string(report.violations.size()) + " superadditivity violation(s)\n";
  for (const auto& v : report.violations) out += "  warning: " + violation_text(v, players) + "\n";
  return out;
}

Json consistency_json(const ahp::ConsistencyReport& r) {
  return Json{{"lambda_max", r.lambda_max}, {"ci", r.ci}, {"ri", r.ri},
              {"cr", r.cr}, {"pass", r.pass}, {"iterations", r.iterations}};
}

std::string consistency_line(const ahp::ConsistencyReport& r) {
  return "lambda_max " + show(r.lambda_max) + "  CI " + show(r.ci) + "  RI " + show(r.ri) + "  CR " + show(r.cr) +
         (r.pass ? "  pass" : "  FAIL");
}

Json weights_json(const ahp::WeightVector& w) {
  Json out = Json::array();
  for (std::size_t i = 0; i < w.labels.size(); ++i) out.push_back(Json{{"label", w.labels[i]}, {"weight", w.w[i]}});
  return out;
}

Json hierarchy_json(const ahp::CriteriaHierarchy& h) {
  Json out;
  out["criteria"] = weights_json(h.criteria);
  if (h.criteria_consistency) out["criteria_consistency"] = consistency_json(*h.criteria_consistency);
  Json alternatives = Json::array();
  for (const auto& alt : h.alternatives) {
    Json entry{{"criterion", alt.criterion}, {"scores", weights_json(alt.scores)}};
    if (alt.consistency) entry["consistency"] = consistency_json(*alt.consistency);
    alternatives.push_back(std::move(entry));
  }
  out["alternatives"] = std::move(alternatives);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "structured" || text == "json") return OutputFormat::kStructured;
  return std::nullopt;
}

std::string render_report(const ReportDocument& doc, OutputFormat format) {
  const auto& players = doc.classical.players;
  const std::size_t n = players.size();
  const bool adjusted = doc.adjusted && doc.factors;

  switch (format) {
    case OutputFormat::kCsv: {
      std::string out = "player,classical,adjusted,delta_g,delta_v\n";
      for (std::size_t i = 0; i < n; ++i) {
        out += csv_field(players[i]) + "," + show(doc.classical.payoffs[i]);
        if (adjusted) {
          out += "," + show(doc.adjusted->adjusted[i]) + "," + show(doc.factors->delta_g[i]) + "," +
                 show(doc.adjusted->delta_v[i]);
        } else {
          out += ",,,";
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::kStructured: {
      Json root;
      root["players"] = players.ids();
      root["grand_value"] = exact(doc.grand_value);
      Json classical = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        classical.push_back(Json{{"player", players[i]}, {"payoff", exact(doc.classical.payoffs[i])}});
      }
      root["classical"] = std::move(classical);
      if (adjusted) {
        Json block;
        block["mode"] = std::string(to_string(doc.adjusted->mode));
        block["factor_sum"] = exact(doc.factors->sum());
        Json rows = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
          rows.push_back(Json{{"player", players[i]},
                              {"g", exact(doc.factors->g[i])},
                              {"delta_g", exact(doc.factors->delta_g[i])},
                              {"classical", exact(doc.classical.payoffs[i])},
                              {"adjusted", exact(doc.adjusted->adjusted[i])},
                              {"delta_v", exact(doc.adjusted->delta_v[i])},
                              {"individually_rational", static_cast<bool>(doc.adjusted->individually_rational[i])}});
        }
        block["players"] = std::move(rows);
        block["efficiency_gap"] = exact(doc.adjusted->efficiency_gap);
        root["adjusted"] = std::move(block);
      }
      root["validation"] = validation_json(doc.validation, players);
      if (doc.hierarchy) root["ahp"] = hierarchy_json(*doc.hierarchy);
      return root.dump(2) + "\n";
    }
    case OutputFormat::kTable:
      break;
  }

  std::vector<std::vector<std::string>> rows;
  if (adjusted) {
    rows.push_back({"player", "classical", "adjusted", "G", "delta_g", "delta_v", "rational"});
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back({players[i], show(doc.classical.payoffs[i]), show(doc.adjusted->adjusted[i]),
                      show(doc.factors->g[i]), show(doc.factors->delta_g[i]), show(doc.adjusted->delta_v[i]),
                      doc.adjusted->individually_rational[i] ? "yes" : "NO"});
    }
  } else {
    rows.push_back({"player", "classical"});
    for (std::size_t i = 0; i < n; ++i) rows.push_back({players[i], show(doc.classical.payoffs[i])});
  }
  std::string out = table(rows);
  if (adjusted) {
    out += "mode: " + std::string(to_string(doc.adjusted->mode)) + "\n";
    out += "factor sum: " + show(doc.factors->sum()) + "\n";
    out += "efficiency gap: " + signed_show(doc.adjusted->efficiency_gap) + "\n";
    for (std::size_t i = 0; i < n; ++i) {
      if (!doc.adjusted->individually_rational[i]) {
        out += "  warning: " + players[i] + " receives less than its standalone value\n";
      }
    }
  }
  out += validation_table(doc.validation, players);
  if (doc.hierarchy) {
    out += "\n" + render_hierarchy(*doc.hierarchy, std::nullopt, OutputFormat::kTable);
  }
  return out;
}

std::string render_validation(const ValidationReport& report, const PlayerSet& players, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv: {
      std::string out = "first,second,union_value,sum_value\n";
      for (const auto& v : report.violations) {
        out += csv_field(describe(v.first, players)) + "," + csv_field(describe(v.second, players)) + "," +
               show(v.union_value) + "," + show(v.sum_value) + "\n";
      }
      return out;
    }
    case OutputFormat::kStructured:
      return validation_json(report, players).dump(2) + "\n";
    case OutputFormat::kTable:
      break;
  }
  return validation_table(report, players);
}

std::string render_hierarchy(const ahp::CriteriaHierarchy& h, const std::optional<ahp::WeightVector>& factors,
                             OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv: {
      std::string out = "level,label,item,weight\n";
      for (std::size_t k = 0; k < h.criteria.labels.size(); ++k) {
        out += "criteria,," + csv_field(h.criteria.labels[k]) + "," + show(h.criteria.w[k]) + "\n";
      }
      for (const auto& alt : h.alternatives) {
        for (std::size_t i = 0; i < alt.scores.labels.size(); ++i) {
          out += "alternative," + csv_field(alt.criterion) + "," + csv_field(alt.scores.labels[i]) + "," +
                 show(alt.scores.w[i]) + "\n";
        }
      }
      if (factors) {
        for (std::size_t i = 0; i < factors->labels.size(); ++i) {
          out += "factor,," + csv_field(factors->labels[i]) + "," + show(factors->w[i]) + "\n";
        }
      }
      return out;
    }
    case OutputFormat::kStructured: {
      Json root = hierarchy_json(h);
      if (factors) root["factors"] = weights_json(*factors);
      return root.dump(2) + "\n";
    }
    case OutputFormat::kTable:
      break;
  }

  std::vector<std::vector<std::string>> rows{{"criterion", "weight"}};
  for (std::size_t k = 0; k < h.criteria.labels.size(); ++k) {
    rows.push_back({h.criteria.labels[k], show(h.criteria.w[k])});
  }
  std::string out = table(rows);
  if (h.criteria_consistency) out += "criteria consistency: " + consistency_line(*h.criteria_consistency) + "\n";

  for (const auto& alt : h.alternatives) {
    std::string line = alt.criterion + ":";
    for (std::size_t i = 0; i < alt.scores.labels.size(); ++i) {
      line += " " + alt.scores.labels[i] + "=" + show(alt.scores.w[i]);
    }
    out += line + (alt.consistency ? "  (" + consistency_line(*alt.consistency) + ")" : "  (direct scores)") + "\n";
  }
  if (factors) {
    std::vector<std::vector<std::string>> g{{"player", "G"}};
    for (std::size_t i = 0; i < factors->labels.size(); ++i) g.push_back({factors->labels[i], show(factors->w[i])});
    out += "\n" + table(g);
  }
  return out;
}

std::string render_estimate(const EstimateReport& report, const SamplingPlan& plan, OutputFormat format) {
  const std::size_t n = report.players.size();
  switch (format) {
    case OutputFormat::kCsv: {
      std::string out = "player,estimate,std_error\n";
      for (std::size_t i = 0; i < n; ++i) {
        out += csv_field(report.players[i]) + "," + show(report.estimates[i]) + "," + show(report.std_error[i]) + "\n";
      }
      return out;
    }
    case OutputFormat::kStructured: {
      Json root;
      root["generator"] = report.generator;
      root["seed"] = plan.seed;
      root["permutations"] = report.samples;
      root["chunk_size"] = plan.chunk_size;
      Json rows = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(Json{{"player", report.players[i]},
                            {"estimate", exact(report.estimates[i])},
                            {"std_error", report.std_error[i]}});
      }
      root["estimates"] = std::move(rows);
      return root.dump(2) + "\n";
    }
    case OutputFormat::kTable:
      break;
  }
  std::vector<std::vector<std::string>> rows{{"player", "estimate", "std_error"}};
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({report.players[i], show(report.estimates[i]), show(report.std_error[i])});
  }
  std::ostringstream head;
  head << "permutation sampling: m = " << report.samples << ", seed = " << plan.seed
       << ", chunk size = " << plan.chunk_size << "\n"
       << "generator: " << report.generator << "\n";
  return head.str() + table(rows);
}

}  // namespace shapalloc
