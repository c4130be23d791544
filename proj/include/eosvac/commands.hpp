#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "eosvac/config.hpp"
#include "eosvac/squeeze.hpp"
#include "eosvac/stats.hpp"

// Scenario runners behind the CLI subcommands. Each writes its files into
// cfg.output_dir and returns the headline numbers for callers and tests.
namespace eosvac::commands {

struct DispersionResult {
  std::filesystem::path nir_csv;
  std::filesystem::path thz_csv;
  std::size_t nir_rows = 0;
  std::size_t thz_rows = 0;
};

struct ResponseResult {
  std::filesystem::path csv;
  std::filesystem::path temporal_csv;
  double cutoff_omega = 0.0;
  double integral = 0.0;            // adaptive quadrature of the continuous model
  double integral_tabulated = 0.0;  // Simpson over the emitted column
};

struct VarianceResult {
  std::filesystem::path summary_json;
  std::filesystem::path sweep_csv;
  SignalStats stats;
  EffectiveField field;
  std::optional<double> n_star;
  double omega_p = 0.0;
  double integral = 0.0;
  double integral_simpson = 0.0;
};

struct ThetaTrace {
  double theta = 0.0;
  std::filesystem::path csv;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double ratio_at_probe_delay = 0.0;
};

struct SqueezeResult {
  std::filesystem::path summary_json;
  std::vector<ThetaTrace> traces;
  std::vector<std::filesystem::path> ellipse_csvs;
  squeeze::SqueezeCoefficients coefficients;
  squeeze::Extrema extrema;
  squeeze::OptimalSqueeze optimum;
  double M = 0.0;
};

struct TracesResult {
  std::filesystem::path csv;
  std::size_t count = 0;
  double variance = 0.0;
};

DispersionResult cmd_dispersion(const RunConfig& cfg);
ResponseResult cmd_response(const RunConfig& cfg);
VarianceResult cmd_variance(const RunConfig& cfg);
/// Throws ConfigError when the squeeze section is absent.
SqueezeResult cmd_squeeze(const RunConfig& cfg);
TracesResult cmd_traces(const RunConfig& cfg, std::size_t count);

}  // namespace eosvac::commands
