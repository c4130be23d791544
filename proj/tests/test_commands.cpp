#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "eosvac/commands.hpp"
#include "eosvac/errors.hpp"
#include "eosvac/output.hpp"
#include "eosvac/units.hpp"

using namespace eosvac;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("eosvac_test_" + tag)) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Table {
  std::vector<std::string> meta;
  std::string header;
  std::vector<std::vector<double>> rows;
};

Table read_csv(const fs::path& p) {
  Table t;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.meta.push_back(line);
    } else if (t.header.empty()) {
      t.header = line;
    } else {
      std::vector<double> row;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
      t.rows.push_back(row);
    }
  }
  return t;
}

RunConfig preset_in(const fs::path& dir) {
  auto cfg = znte_preset();
  cfg.output_dir = dir;
  return cfg;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double x : {0.0, 1.0, -2.5e-300, 3.4273347927962115e28, 0.1}) {
    CHECK(std::stod(output::format_double(x)) == x);
  }
  CHECK(output::format_double(1.0) == "1.0000000000000000e+00");
}

TEST_CASE("dispersion command") {
  TempDir tmp("dispersion");
  auto cfg = preset_in(tmp.path);
  const auto res = commands::cmd_dispersion(cfg);
  const auto nir = read_csv(res.nir_csv);
  CHECK(nir.header == "freq_thz,n");
  CHECK(nir.rows.size() == 251);
  CHECK(res.nir_rows == 251);
  bool found = false;
  for (const auto& r : nir.rows) {
    if (r[0] == 255.0) {
      CHECK(r[1] == doctest::Approx(2.761276275138908).epsilon(1e-14));
      found = true;
    }
  }
  CHECK(found);
  const auto thz = read_csv(res.thz_csv);
  CHECK(thz.rows.size() == 3201);
  bool hashed = false;
  for (const auto& m : thz.meta) hashed = hashed || m == "# config_hash=" + cfg.hash();
  CHECK(hashed);

  SUBCASE("empty range gives a header-only table") {
    cfg.dispersion.nir_min_thz = 300.0;
    cfg.dispersion.nir_max_thz = 200.0;
    const auto empty = commands::cmd_dispersion(cfg);
    const auto t = read_csv(empty.nir_csv);
    CHECK(t.header == "freq_thz,n");
    CHECK(t.rows.empty());
    CHECK(empty.nir_rows == 0);
  }
}

TEST_CASE("response command") {
  TempDir tmp("response");
  const auto cfg = preset_in(tmp.path);
  const auto res = commands::cmd_response(cfg);
  const auto t = read_csv(res.csv);
  CHECK(t.header == "omega_thz,f,sinc,R,integrand");
  REQUIRE(t.rows.size() == 3201);
  const double cut_thz = units::angular_to_thz(res.cutoff_omega);
  for (const auto& r : t.rows) {
    if (r[0] < cut_thz) CHECK(r[3] == 0.0);
    if (r[0] == 75.0) CHECK(r[1] == doctest::Approx(0.5).epsilon(1e-14));
  }
  CHECK(res.integral == doctest::Approx(3.4273347927962115e28).epsilon(1e-8));
  CHECK(res.integral_tabulated == doctest::Approx(res.integral).epsilon(1e-3));
}

TEST_CASE("variance command") {
  TempDir tmp("variance");
  const auto cfg = preset_in(tmp.path);
  const auto res = commands::cmd_variance(cfg);
  const auto j = nlohmann::ordered_json::parse(slurp(res.summary_json));
  CHECK(j.begin().key() == "meta");
  CHECK(j["meta"]["config_hash"] == cfg.hash());
  CHECK(j["kappa"].get<double>() == doctest::Approx(3.6019997418487522e-6).epsilon(1e-8));
  CHECK(j["n_star"].get<double>() == doctest::Approx(7.7074842e10).epsilon(1e-7));
  CHECK(j["integral_simpson"].get<double>() ==
        doctest::Approx(j["integral"].get<double>()).epsilon(1e-6));
  const auto t = read_csv(res.sweep_csv);
  CHECK(t.header == "n_photons,ds_over_n,sn_over_n,excess");
  CHECK(t.rows.size() == 121);

  SUBCASE("cutoff disabled") {
    auto open = cfg;
    open.cutoff_enabled = false;
    const auto r2 = commands::cmd_variance(open);
    CHECK(r2.integral / res.integral == doctest::Approx(1.2158301592).epsilon(1e-7));
  }
}

TEST_CASE("squeeze command") {
  TempDir tmp("squeeze");
  auto cfg = preset_in(tmp.path);
  const auto res = commands::cmd_squeeze(cfg);
  REQUIRE(res.traces.size() == 2);
  CHECK(res.traces[0].csv.filename() == "squeeze_theta0pi.csv");
  CHECK(res.traces[1].csv.filename() == "squeeze_theta1pi.csv");
  for (const auto& tr : res.traces) {
    CHECK(tr.min_ratio == doctest::Approx(res.extrema.min).epsilon(1e-4));
    CHECK(tr.max_ratio == doctest::Approx(res.extrema.max).epsilon(1e-4));
    const auto t = read_csv(tr.csv);
    CHECK(t.header == "tau_fs,ratio");
    CHECK(t.rows.back()[0] - t.rows.front()[0] >= 25.0 - 1e-9);
  }
  CHECK(res.ellipse_csvs.size() == 3);
  CHECK(read_csv(res.ellipse_csvs.back()).rows.size() == 257);
  CHECK(res.optimum.M_opt == doctest::Approx(5.764149).epsilon(1e-6));
  const auto j = nlohmann::ordered_json::parse(slurp(res.summary_json));
  CHECK(j["optimum"]["kind"] == "interior");

  cfg.squeeze.reset();
  CHECK_THROWS_AS(commands::cmd_squeeze(cfg), ConfigError);
}

TEST_CASE("traces are byte-identical across runs") {
  TempDir a("traces_a");
  TempDir b("traces_b");
  const auto ra = commands::cmd_traces(preset_in(a.path), 1000);
  auto cfg_b = preset_in(b.path);
  const auto rb = commands::cmd_traces(cfg_b, 1000);
  CHECK(slurp(ra.csv).size() > 0);
  // The output directory is part of the resolved config, so compare rows only.
  CHECK(read_csv(ra.csv).rows == read_csv(rb.csv).rows);
  const auto first = slurp(rb.csv);
  commands::cmd_traces(cfg_b, 1000);
  CHECK(slurp(rb.csv) == first);
  CHECK(read_csv(rb.csv).rows.size() == 1000);
}

TEST_CASE("edge configurations") {
  TempDir tmp("edges");
  auto cfg = preset_in(tmp.path);

  SUBCASE("no squeezing gives a flat trace at the vacuum level") {
    cfg.squeeze->sinh_r = 0.0;
    const auto res = commands::cmd_squeeze(cfg);
    for (const auto& tr : res.traces) {
      for (const auto& r : read_csv(tr.csv).rows) CHECK(r[1] == 1.0);
    }
  }
  SUBCASE("vanishing coupling has no crossover") {
    cfg.crystal.r41_pm_per_v = 0.0;
    const auto res = commands::cmd_variance(cfg);
    CHECK(res.stats.kappa == 0.0);
    CHECK_FALSE(res.n_star.has_value());
    const auto j = nlohmann::json::parse(slurp(res.summary_json));
    CHECK(j["n_star"].is_null());
    const auto traces = commands::cmd_traces(cfg, 10);
    CHECK(traces.variance == cfg.probe.photons);
  }
  SUBCASE("dispersion rows are ordered") {
    const auto res = commands::cmd_dispersion(cfg);
    const auto t = read_csv(res.thz_csv);
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][0] > t.rows[i - 1][0]);
  }
  SUBCASE("probe temporal profile") {
    const auto res = commands::cmd_response(cfg);
    const auto t = read_csv(res.temporal_csv);
    CHECK(t.header == "t_fs,intensity,envelope");
    REQUIRE(t.rows.size() == 2501);
    CHECK(t.rows[1250][0] == 0.0);
    CHECK(t.rows[1250][2] == doctest::Approx(1.0));
  }
}
