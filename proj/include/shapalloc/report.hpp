#pragma once

// Rendering of engine results as aligned text tables, CSV, or JSON
// ("structured"). Renderers only format values already computed by the
// engines.

#include <optional>
#include <string>
#include <string_view>

#include "shapalloc/adjust.hpp"
#include "shapalloc/ahp.hpp"
#include "shapalloc/game.hpp"
#include "shapalloc/sampling.hpp"

namespace shapalloc {

enum class OutputFormat { kTable, kCsv, kStructured };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// Fractional digits used for every displayed number.
inline constexpr int kDisplayPlaces = 4;

struct ReportDocument {
  Rational grand_value;
  Allocation classical;
  std::optional<AdjustmentFactors> factors;
  std::optional<AdjustedAllocation> adjusted;  // present together with factors
  ValidationReport validation;
  std::optional<ahp::CriteriaHierarchy> hierarchy;
};

/// CSV header: player,classical,adjusted,delta_g,delta_v. Adjusted columns
/// stay empty for a classical-only document.
std::string render_report(const ReportDocument& doc, OutputFormat format);

std::string render_validation(const ValidationReport& report, const PlayerSet& players, OutputFormat format);

/// Criteria and alternative weights with their consistency blocks, plus the
/// synthesized factors when given.
std::string render_hierarchy(const ahp::CriteriaHierarchy& hierarchy, const std::optional<ahp::WeightVector>& factors,
                             OutputFormat format);

std::string render_estimate(const EstimateReport& report, const SamplingPlan& plan, OutputFormat format);

}  // namespace shapalloc
