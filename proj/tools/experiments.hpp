#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gausswork/sampling.hpp"
#include "gausswork/work.hpp"

namespace gausswork::cli {

/// Everything a randomized scatter run needs. Identical configs produce
/// byte-identical output files, whatever the worker count.
struct ExperimentConfig {
  std::string figure;  // preset id, empty for custom runs
  StateFamily family = StateFamily::SymmetricSts;
  double lambda = 0.0;
  bool avg_angle = false;
  double phi = 0.0;  // pointwise measurement angle when not averaged
  int samples = 20000;
  std::uint64_t seed = 12345;
  int workers = 1;
  SampleRanges ranges = default_ranges(StateFamily::SymmetricSts);
  std::string out;
  std::string curves_out;  // derived from `out` for presets when empty
};

/// Point sweep over a single parameter, emitting (x, curve, W) rows.
struct SweepSpec {
  std::string figure;  // preset id, empty for custom sweeps
  StateFamily family = StateFamily::SymmetricSts;
  std::string vary = "c";
  double a = 3.0;
  double b = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> lambdas{1.0};
  bool avg_angle = false;
  int points = 257;
  double from = 0.0;
  double to = std::numeric_limits<double>::quiet_NaN();  // family bound when NaN
  std::string out;
};

/// Bundled dataset presets 2a, 2b, 3a, 3b, 4, 5, 6a, 6b.
ExperimentConfig scatter_preset(const std::string& id);

/// Bundled sweep presets 2c and 7.
SweepSpec sweep_preset(const std::string& id);

/// Overlay JSON keys onto a config (missing keys keep their values).
void apply_config_json(ExperimentConfig& cfg, const nlohmann::json& j);

nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// 17 significant digits, the lossless CSV float format.
std::string format_double(double v);

/// Run the sampler/evaluator pool and write the dataset (plus the threshold
/// curve companion for presets). Throws QuadratureFailure with the offending
/// sample in the message when an angle average fails to converge.
void run_scatter(const ExperimentConfig& cfg);

void run_sweep(const SweepSpec& spec);

}  // namespace gausswork::cli
