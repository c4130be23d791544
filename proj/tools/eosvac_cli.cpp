// Command-line driver: loads a run configuration, applies flag overrides and
// writes the CSV/JSON artifacts for each scenario.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "eosvac/commands.hpp"
#include "eosvac/config.hpp"
#include "eosvac/errors.hpp"
#include "eosvac/units.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kComputation = 3,
  kIo = 4,
};

struct Options {
  std::string config_path;
  std::string out_dir;
  bool no_cutoff = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> grid_step_thz;
  std::optional<std::size_t> count;
};

eosvac::RunConfig resolve(const Options& opt) {
  auto cfg = opt.config_path.empty() ? eosvac::znte_preset()
                                     : eosvac::load_config(opt.config_path);
  if (!opt.out_dir.empty()) cfg.output_dir = opt.out_dir;
  if (opt.no_cutoff) cfg.cutoff_enabled = false;
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.grid_step_thz) cfg.grid.step_thz = *opt.grid_step_thz;
  if (opt.count) cfg.trace_count = *opt.count;
  cfg.validate();
  return cfg;
}

void run(const std::string& command, const eosvac::RunConfig& cfg) {
  using namespace eosvac;
  const bool all = command == "all";
  if (all || command == "dispersion") {
    const auto r = commands::cmd_dispersion(cfg);
    std::cout << "dispersion: " << r.nir_csv.string() << ", " << r.thz_csv.string() << "\n";
  }
  if (all || command == "response") {
    const auto r = commands::cmd_response(cfg);
    std::printf("response: cutoff %.4f THz, integral %.6e -> %s\n",
                units::angular_to_thz(r.cutoff_omega), r.integral, r.csv.c_str());
  }
  if (all || command == "variance") {
    const auto r = commands::cmd_variance(cfg);
    std::printf("variance: kappa %.6e, e_rms %.3f V/m, N* %s -> %s\n", r.stats.kappa, r.field.e_rms,
                r.n_star ? std::to_string(*r.n_star).c_str() : "none",
                r.summary_json.c_str());
  }
  if (command == "squeeze" || (all && cfg.squeeze)) {
    const auto r = commands::cmd_squeeze(cfg);
    std::printf("squeeze: a %.6f, b %.6f, M %.4f, floor %.4f, peak %.4f -> %s\n",
                r.coefficients.a, r.coefficients.b, r.M, r.extrema.min, r.extrema.max,
                r.summary_json.c_str());
  }
  if (all || command == "traces") {
    const auto r = commands::cmd_traces(cfg, cfg.trace_count);
    std::cout << "traces: " << r.count << " pulses -> " << r.csv.string() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electro-optic sampling of multi-THz vacuum fluctuations"};
  app.require_subcommand(1, 1);

  Options opt;
  app.add_option("--config", opt.config_path, "Run configuration (JSON); defaults to the built-in ZnTe preset");
  app.add_option("--out", opt.out_dir, "Output directory (overrides output_dir)");
  app.add_flag("--no-cutoff", opt.no_cutoff, "Disable the diffraction low-frequency cutoff");
  app.add_option("--seed", opt.seed, "Seed for synthetic traces");
  app.add_option("--grid-step-thz", opt.grid_step_thz, "Response grid spacing in THz")
      ->check(CLI::PositiveNumber);

  const std::pair<const char*, const char*> subcommands[] = {
      {"dispersion", "NIR and THz refractive index tables"},
      {"response", "Response function, variance integrand and probe pulse shape"},
      {"variance", "Vacuum-induced EOS variance and photon-number sweep"},
      {"squeeze", "Squeezed-vacuum variance ratio versus delay"},
      {"all", "Every output above plus synthetic traces"},
  };
  for (const auto& [name, help] : subcommands) app.add_subcommand(name, help)->fallthrough();
  auto* traces = app.add_subcommand("traces", "Synthesize per-pulse detector signals")->fallthrough();
  traces->add_option("--count", opt.count, "Number of pulses")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    run(command, resolve(opt));
  } catch (const eosvac::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const eosvac::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
