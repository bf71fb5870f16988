#include "shapalloc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "shapalloc/adjust.hpp"
#include "shapalloc/ahp.hpp"
#include "shapalloc/errors.hpp"
#include "shapalloc/report.hpp"
#include "shapalloc/sampling.hpp"
#include "shapalloc/scenario.hpp"

namespace shapalloc {
namespace {

struct Options {
  std::string format = "table";
  std::string output;
  std::string scenario;
  std::optional<std::string> mode;
  bool normalize = false;
  std::string method = "eigen";
  bool override_consistency = false;
  std::uint64_t permutations = 100'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 4096;
  unsigned workers = 1;
};

// Factors for `allocate`: given directly or synthesized from the AHP block.
AdjustmentFactors resolve_factors(const ScenarioFile& scenario, const PlayerSet& players, const Options& opt,
                                  std::optional<ahp::CriteriaHierarchy>& hierarchy) {
  FactorOptions factor_options;
  factor_options.normalize = opt.normalize || scenario.normalize_factors.value_or(false);
  if (scenario.factors) return compute_deltas(players, *scenario.factors, factor_options);
  if (!scenario.ahp) throw DomainError("scenario defines neither 'factors' nor 'ahp'; nothing to allocate with");

  hierarchy = build_hierarchy(scenario, *ahp::parse_weight_method(opt.method));
  const auto g = ahp::synthesize_factors(*hierarchy, {opt.override_consistency});
  std::vector<Rational> exact;
  for (const double x : g.w) exact.push_back(from_double(x));
  return compute_deltas(players, std::move(exact), factor_options);
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  const auto format = *parse_output_format(opt.format);
  const auto scenario = load_scenario(opt.scenario);

  std::string text;
  if (command == "shapley" || command == "allocate") {
    const auto game = build_game(scenario);
    ReportDocument doc{game.grand_value(), shapley_exact(game, {false}), std::nullopt, std::nullopt,
                       validate_game(game), std::nullopt};
    if (command == "allocate") {
      AdjustMode mode = scenario.mode.value_or(AdjustMode::kPerCoalition);
      if (opt.mode) mode = *parse_adjust_mode(*opt.mode);
      doc.factors = resolve_factors(scenario, game.players(), opt, doc.hierarchy);
      doc.adjusted = adjusted_shapley(game, *doc.factors, mode);
    }
    text = render_report(doc, format);
  } else if (command == "validate") {
    const auto game = build_game(scenario);
    text = render_validation(validate_game(game), game.players(), format);
  } else if (command == "sample") {
    const auto game = build_game(scenario);
    const SamplingPlan plan{opt.permutations, opt.seed, opt.chunk_size};
    text = render_estimate(sample_shapley(table_oracle(game), game.players(), plan, opt.workers), plan, format);
  } else if (command == "ahp weights" || command == "ahp synthesize") {
    const auto hierarchy = build_hierarchy(scenario, *ahp::parse_weight_method(opt.method));
    std::optional<ahp::WeightVector> factors;
    if (command == "ahp synthesize") factors = ahp::synthesize_factors(hierarchy, {opt.override_consistency});
    text = render_hierarchy(hierarchy, factors, format);
  }

  if (opt.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw Error("cannot write output file '" + opt.output + "'");
    file << text;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shapley profit allocation with AHP innovation-factor adjustment", "shapalloc"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "structured"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write the report to this file instead of stdout");

  const auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", opt.scenario, "Scenario file")->required();
  };
  const auto add_ahp_flags = [&](CLI::App* sub) {
    sub->add_option("--method", opt.method, "Priority vector method")
        ->check(CLI::IsMember({"eigen", "geometric"}))
        ->capture_default_str();
    sub->add_flag("--override-consistency", opt.override_consistency, "Synthesize even if a CR is >= 0.1");
  };

  auto* shapley = app.add_subcommand("shapley", "Exact classical Shapley allocation");
  add_scenario(shapley);

  auto* allocate = app.add_subcommand("allocate", "Classical and innovation-adjusted allocation");
  add_scenario(allocate);
  allocate->add_option("--mode", opt.mode, "Adjustment mode (default: scenario's mode, else eq3)")
      ->check(CLI::IsMember({"eq3", "grand"}));
  allocate->add_flag("--normalize", opt.normalize, "Rescale factors to sum to exactly 1");
  add_ahp_flags(allocate);

  auto* ahp_cmd = app.add_subcommand("ahp", "AHP weights and factor synthesis");
  ahp_cmd->require_subcommand(1);
  auto* weights = ahp_cmd->add_subcommand("weights", "Priority weights and consistency of every matrix");
  add_scenario(weights);
  add_ahp_flags(weights);
  auto* synthesize = ahp_cmd->add_subcommand("synthesize", "Synthesize per-player factors G");
  add_scenario(synthesize);
  add_ahp_flags(synthesize);

  auto* sample = app.add_subcommand("sample", "Monte Carlo permutation estimate");
  add_scenario(sample);
  sample->add_option("--permutations", opt.permutations, "Number of sampled permutations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--seed", opt.seed, "64-bit seed")->capture_default_str();
  sample->add_option("--chunk-size", opt.chunk_size, "Permutations per chunk")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Report superadditivity violations");
  add_scenario(validate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string command;
  if (shapley->parsed()) command = "shapley";
  if (allocate->parsed()) command = "allocate";
  if (weights->parsed()) command = "ahp weights";
  if (synthesize->parsed()) command = "ahp synthesize";
  if (sample->parsed()) command = "sample";
  if (validate->parsed()) command = "validate";

  try {
    return dispatch(command, opt, out);
  } catch (const ConsistencyGateError& e) {
    err << "error: " << e.what() << "\nCR = " << to_fixed(from_double(e.cr()), kDisplayPlaces) << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace shapalloc
