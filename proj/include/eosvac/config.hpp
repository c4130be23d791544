#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eosvac/dispersion.hpp"
#include "eosvac/probe.hpp"
#include "eosvac/response.hpp"
#include "eosvac/squeeze.hpp"

namespace eosvac {

// I/O-facing units: THz (cyclic), fs, um, pm/V, cm^-1.

struct ProbeConfig {
  double center_thz = 255.0;
  double bandwidth_thz = 150.0;
  std::string shape = "rectangular";
  double photons = 1e10;
  double delay_fs = 0.0;
  std::optional<std::string> spectrum_csv;
  double eta_threshold_thz = 30.0;
};

struct CrystalConfig {
  double length_um = 7.0;
  double r41_pm_per_v = 4.0;
  double waist_um = 3.0;
};

struct SqueezeConfig {
  double center_thz = 40.0;
  double width_thz = 40.0;
  double sinh_r = 2.0;
  std::vector<double> theta_over_pi{0.0, 1.0};
  std::string m_convention = "sinh";  // "sinh" or "sinh2"
  double periods = 2.0;
  double tau_step_fs = 0.05;
  double m_search_max = 100.0;
  std::size_t ellipse_points = 256;
};

struct GridConfig {
  double max_thz = 160.0;
  double step_thz = 0.05;
};

struct DispersionRangeConfig {
  double nir_min_thz = 150.0;
  double nir_max_thz = 400.0;
  double nir_step_thz = 1.0;
  double thz_min_thz = 0.0;
  double thz_max_thz = 160.0;
  double thz_step_thz = 0.05;
};

struct SweepConfig {
  double n_min = 1e4;
  double n_max = 1e16;
  std::size_t points = 121;
};

struct RunConfig {
  Material material = znte();
  ProbeConfig probe;
  CrystalConfig crystal;
  std::optional<SqueezeConfig> squeeze;
  GridConfig grid;
  DispersionRangeConfig dispersion;
  SweepConfig sweep;
  std::size_t trace_count = 100000;
  bool cutoff_enabled = true;
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 20180101;
  // Directory that relative paths inside the config resolve against.
  std::filesystem::path base_dir = ".";

  /// Throws ConfigError listing every violated field.
  void validate() const;

  /// Fully resolved configuration (without base_dir), keys sorted.
  nlohmann::json to_json() const;
  /// FNV-1a 64 of the compact resolved JSON, as 16 hex digits.
  std::string hash() const;
};

/// Parameter set of the shipped configs/paper-znte.json.
RunConfig znte_preset();

/// Reads sections material, probe, crystal (required), squeeze (optional) and
/// grid, dispersion, sweep, traces, cutoff_enabled, output_dir, seed
/// (optional, defaulted). Unknown keys are rejected. Validates before returning.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

ProbeSpec make_probe(const RunConfig& cfg);
DetectorEfficiency make_detector(const RunConfig& cfg);
CrystalGeometry make_crystal(const RunConfig& cfg);
FrequencyGrid make_grid(const RunConfig& cfg);
squeeze::SqueezeSpec make_squeeze(const SqueezeConfig& sc, double theta_over_pi);

}  // namespace eosvac
