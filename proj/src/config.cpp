#include "eosvac/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>

#include "eosvac/errors.hpp"
#include "eosvac/units.hpp"

namespace eosvac {

using nlohmann::json;

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string s = "invalid configuration:";
  for (const auto& p : problems) s += "\n  " + p;
  return s;
}

// Reads typed fields out of a JSON object, recording a message per bad field.
class SectionReader {
 public:
  SectionReader(const json& obj, std::string path, std::vector<std::string>& problems)
      : obj_(obj), path_(std::move(path)), problems_(problems) {
    if (!obj_.is_object()) problems_.push_back(path_ + ": expected an object");
  }

  template <typename T>
  void read(const char* key, T& dst) {
    seen_.insert(key);
    if (!obj_.is_object() || !obj_.contains(key)) return;
    const auto& v = obj_.at(key);
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw std::invalid_argument("expected a number");
        dst = v.get<double>();
        if (!std::isfinite(dst)) throw std::invalid_argument("must be finite");
      } else if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          throw std::invalid_argument("expected a non-negative integer");
        }
        dst = v.get<T>();
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw std::invalid_argument("expected true or false");
        dst = v.get<bool>();
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw std::invalid_argument("expected a string");
        dst = v.get<std::string>();
      } else if constexpr (std::is_same_v<T, std::vector<double>>) {
        if (!v.is_array()) throw std::invalid_argument("expected an array of numbers");
        std::vector<double> out;
        for (const auto& e : v) {
          if (!e.is_number()) throw std::invalid_argument("expected an array of numbers");
          out.push_back(e.get<double>());
        }
        dst = std::move(out);
      } else {
        static_assert(sizeof(T) == 0, "unsupported field type");
      }
    } catch (const std::invalid_argument& e) {
      problems_.push_back(path_ + "." + key + ": " + e.what());
    }
  }

  void reject_unknown() {
    if (!obj_.is_object()) return;
    for (const auto& [k, v] : obj_.items()) {
      if (!seen_.count(k)) problems_.push_back(path_ + "." + k + ": unknown key");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::vector<std::string>& problems_;
  std::set<std::string> seen_;
};

void require(bool ok, std::vector<std::string>& problems, const std::string& msg) {
  if (!ok) problems.push_back(msg);
}

void parse_material(const json& j, Material& m, std::vector<std::string>& problems) {
  if (j.is_string()) {
    try {
      m = material_by_name(j.get<std::string>());
    } catch (const DomainError& e) {
      problems.push_back(std::string("material: ") + e.what());
    }
    return;
  }
  SectionReader r(j, "material", problems);
  std::string base = m.name;
  r.read("base", base);
  try {
    m = material_by_name(base);
  } catch (const DomainError& e) {
    problems.push_back(std::string("material.base: ") + e.what());
  }
  r.read("name", m.name);
  r.read("A", m.sellmeier.A);
  r.read("B", m.sellmeier.B);
  r.read("c2_um2", m.sellmeier.c2_um2);
  double to = units::angular_to_wavenumber_cm(m.phonon.omega_to);
  double lo = units::angular_to_wavenumber_cm(m.phonon.omega_lo);
  double gamma = units::angular_to_wavenumber_cm(m.phonon.gamma);
  r.read("omega_to_cm1", to);
  r.read("omega_lo_cm1", lo);
  r.read("gamma_cm1", gamma);
  r.read("eps_inf", m.phonon.eps_inf);
  r.reject_unknown();
  m.phonon.omega_to = units::wavenumber_cm_to_angular(to);
  m.phonon.omega_lo = units::wavenumber_cm_to_angular(lo);
  m.phonon.gamma = units::wavenumber_cm_to_angular(gamma);
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

void RunConfig::validate() const {
  std::vector<std::string> problems;
  const auto& s = material.sellmeier;
  require(s.A > 0.0, problems, "material.A: must be > 0");
  require(s.B >= 0.0, problems, "material.B: must be >= 0");
  require(s.c2_um2 >= 0.0, problems, "material.c2_um2: must be >= 0");
  const auto& ph = material.phonon;
  require(ph.omega_to > 0.0, problems, "material.omega_to_cm1: must be > 0");
  require(ph.omega_lo > ph.omega_to, problems, "material.omega_lo_cm1: must exceed omega_to_cm1");
  require(ph.gamma > 0.0, problems, "material.gamma_cm1: must be > 0");
  require(ph.eps_inf > 1.0, problems, "material.eps_inf: must be > 1");

  require(probe.shape == "rectangular" || probe.shape == "tabulated", problems,
          "probe.shape: must be 'rectangular' or 'tabulated'");
  require(probe.bandwidth_thz > 0.0, problems, "probe.bandwidth_thz: must be > 0");
  require(probe.center_thz - 0.5 * probe.bandwidth_thz > 0.0, problems,
          "probe.center_thz: spectrum must stay above 0 THz (center > bandwidth/2)");
  require(probe.photons > 0.0, problems, "probe.photons: must be > 0");
  require(probe.eta_threshold_thz >= 0.0, problems, "probe.eta_threshold_thz: must be >= 0");
  require(probe.shape != "tabulated" || probe.spectrum_csv.has_value(), problems,
          "probe.spectrum_csv: required when probe.shape is 'tabulated'");
  if (probe.shape == "rectangular" && probe.bandwidth_thz > 0.0 &&
      probe.center_thz - 0.5 * probe.bandwidth_thz > 0.0 && s.A > 0.0 && s.c2_um2 >= 0.0) {
    const double hi = units::thz_to_angular(probe.center_thz);
    const double lam = wavelength_um(hi);
    require(lam * lam > s.c2_um2, problems,
            "probe.center_thz: lies beyond the Sellmeier pole of the material");
  }

  require(crystal.length_um > 0.0, problems, "crystal.length_um: must be > 0");
  require(crystal.waist_um > 0.0, problems, "crystal.waist_um: must be > 0");

  if (squeeze) {
    const auto& q = *squeeze;
    require(q.width_thz > 0.0, problems, "squeeze.width_thz: must be > 0");
    require(q.center_thz - 0.5 * q.width_thz > 0.0, problems,
            "squeeze.center_thz: band must stay above 0 THz (center > width/2)");
    require(q.sinh_r >= 0.0, problems, "squeeze.sinh_r: must be >= 0");
    require(!q.theta_over_pi.empty(), problems, "squeeze.theta_over_pi: needs at least one phase");
    for (double t : q.theta_over_pi) {
      require(t > -1.0 && t <= 1.0, problems, "squeeze.theta_over_pi: each phase must lie in (-1, 1]");
    }
    require(q.m_convention == "sinh" || q.m_convention == "sinh2", problems,
            "squeeze.m_convention: must be 'sinh' or 'sinh2'");
    require(q.periods >= 2.0, problems, "squeeze.periods: must be >= 2");
    require(q.tau_step_fs > 0.0 && q.tau_step_fs <= 0.1, problems,
            "squeeze.tau_step_fs: must lie in (0, 0.1]");
    require(q.m_search_max > 0.0, problems, "squeeze.m_search_max: must be > 0");
    require(q.ellipse_points >= 3, problems, "squeeze.ellipse_points: must be >= 3");
  }

  require(grid.step_thz > 0.0, problems, "grid.step_thz: must be > 0");
  require(grid.max_thz >= probe.bandwidth_thz, problems,
          "grid.max_thz: must cover the response support (>= probe.bandwidth_thz)");
  require(dispersion.nir_step_thz > 0.0, problems, "dispersion.nir_step_thz: must be > 0");
  require(dispersion.thz_step_thz > 0.0, problems, "dispersion.thz_step_thz: must be > 0");
  require(dispersion.nir_min_thz > 0.0, problems, "dispersion.nir_min_thz: must be > 0");
  require(dispersion.thz_min_thz >= 0.0, problems, "dispersion.thz_min_thz: must be >= 0");
  require(sweep.n_min > 0.0 && sweep.n_max >= sweep.n_min, problems,
          "sweep: need 0 < n_min <= n_max");
  require(sweep.points >= 1, problems, "sweep.points: must be >= 1");
  require(trace_count >= 1, problems, "traces.count: must be >= 1");

  if (!problems.empty()) throw ConfigError(std::move(problems));
}

json RunConfig::to_json() const {
  json j;
  j["material"] = {{"name", material.name},
                   {"A", material.sellmeier.A},
                   {"B", material.sellmeier.B},
                   {"c2_um2", material.sellmeier.c2_um2},
                   {"omega_to_cm1", units::angular_to_wavenumber_cm(material.phonon.omega_to)},
                   {"omega_lo_cm1", units::angular_to_wavenumber_cm(material.phonon.omega_lo)},
                   {"gamma_cm1", units::angular_to_wavenumber_cm(material.phonon.gamma)},
                   {"eps_inf", material.phonon.eps_inf}};
  j["probe"] = {{"center_thz", probe.center_thz},       {"bandwidth_thz", probe.bandwidth_thz},
                {"shape", probe.shape},                 {"photons", probe.photons},
                {"delay_fs", probe.delay_fs},           {"eta_threshold_thz", probe.eta_threshold_thz}};
  if (probe.spectrum_csv) j["probe"]["spectrum_csv"] = *probe.spectrum_csv;
  j["crystal"] = {{"length_um", crystal.length_um},
                  {"r41_pm_per_v", crystal.r41_pm_per_v},
                  {"waist_um", crystal.waist_um}};
  if (squeeze) {
    const auto& q = *squeeze;
    j["squeeze"] = {{"center_thz", q.center_thz},     {"width_thz", q.width_thz},
                    {"sinh_r", q.sinh_r},             {"theta_over_pi", q.theta_over_pi},
                    {"m_convention", q.m_convention}, {"periods", q.periods},
                    {"tau_step_fs", q.tau_step_fs},   {"m_search_max", q.m_search_max},
                    {"ellipse_points", q.ellipse_points}};
  }
  j["grid"] = {{"max_thz", grid.max_thz}, {"step_thz", grid.step_thz}};
  j["dispersion"] = {{"nir_min_thz", dispersion.nir_min_thz}, {"nir_max_thz", dispersion.nir_max_thz},
                     {"nir_step_thz", dispersion.nir_step_thz}, {"thz_min_thz", dispersion.thz_min_thz},
                     {"thz_max_thz", dispersion.thz_max_thz}, {"thz_step_thz", dispersion.thz_step_thz}};
  j["sweep"] = {{"n_min", sweep.n_min}, {"n_max", sweep.n_max}, {"points", sweep.points}};
  j["traces"] = {{"count", trace_count}};
  j["cutoff_enabled"] = cutoff_enabled;
  j["output_dir"] = output_dir.generic_string();
  j["seed"] = seed;
  return j;
}

std::string RunConfig::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig znte_preset() {
  RunConfig cfg;
  cfg.squeeze = SqueezeConfig{};
  cfg.output_dir = "out/paper-znte";
  return cfg;
}

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  std::vector<std::string> problems;
  RunConfig cfg;
  cfg.base_dir = base_dir;
  if (!j.is_object()) throw ConfigError({"config: top level must be an object"});

  static const std::set<std::string> known = {"material", "probe",      "crystal", "squeeze",
                                              "grid",     "dispersion", "sweep",   "traces",
                                              "cutoff_enabled", "output_dir", "seed"};
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) problems.push_back(k + ": unknown key");
  }
  for (const char* required : {"material", "probe", "crystal"}) {
    if (!j.contains(required)) problems.push_back(std::string(required) + ": section missing");
  }

  if (j.contains("material")) parse_material(j.at("material"), cfg.material, problems);
  if (j.contains("probe")) {
    SectionReader r(j.at("probe"), "probe", problems);
    r.read("center_thz", cfg.probe.center_thz);
    r.read("bandwidth_thz", cfg.probe.bandwidth_thz);
    r.read("shape", cfg.probe.shape);
    r.read("photons", cfg.probe.photons);
    r.read("delay_fs", cfg.probe.delay_fs);
    r.read("eta_threshold_thz", cfg.probe.eta_threshold_thz);
    std::string spectrum;
    r.read("spectrum_csv", spectrum);
    if (!spectrum.empty()) cfg.probe.spectrum_csv = spectrum;
    r.reject_unknown();
  }
  if (j.contains("crystal")) {
    SectionReader r(j.at("crystal"), "crystal", problems);
    r.read("length_um", cfg.crystal.length_um);
    r.read("r41_pm_per_v", cfg.crystal.r41_pm_per_v);
    r.read("waist_um", cfg.crystal.waist_um);
    r.reject_unknown();
  }
  if (j.contains("squeeze")) {
    SqueezeConfig q;
    SectionReader r(j.at("squeeze"), "squeeze", problems);
    r.read("center_thz", q.center_thz);
    r.read("width_thz", q.width_thz);
    r.read("sinh_r", q.sinh_r);
    r.read("theta_over_pi", q.theta_over_pi);
    r.read("m_convention", q.m_convention);
    r.read("periods", q.periods);
    r.read("tau_step_fs", q.tau_step_fs);
    r.read("m_search_max", q.m_search_max);
    r.read("ellipse_points", q.ellipse_points);
    r.reject_unknown();
    cfg.squeeze = q;
  }
  if (j.contains("grid")) {
    SectionReader r(j.at("grid"), "grid", problems);
    r.read("max_thz", cfg.grid.max_thz);
    r.read("step_thz", cfg.grid.step_thz);
    r.reject_unknown();
  }
  if (j.contains("dispersion")) {
    SectionReader r(j.at("dispersion"), "dispersion", problems);
    r.read("nir_min_thz", cfg.dispersion.nir_min_thz);
    r.read("nir_max_thz", cfg.dispersion.nir_max_thz);
    r.read("nir_step_thz", cfg.dispersion.nir_step_thz);
    r.read("thz_min_thz", cfg.dispersion.thz_min_thz);
    r.read("thz_max_thz", cfg.dispersion.thz_max_thz);
    r.read("thz_step_thz", cfg.dispersion.thz_step_thz);
    r.reject_unknown();
  }
  if (j.contains("sweep")) {
    SectionReader r(j.at("sweep"), "sweep", problems);
    r.read("n_min", cfg.sweep.n_min);
    r.read("n_max", cfg.sweep.n_max);
    r.read("points", cfg.sweep.points);
    r.reject_unknown();
  }
  if (j.contains("traces")) {
    SectionReader r(j.at("traces"), "traces", problems);
    r.read("count", cfg.trace_count);
    r.reject_unknown();
  }
  {
    SectionReader r(j, "config", problems);
    r.read("cutoff_enabled", cfg.cutoff_enabled);
    std::string out = cfg.output_dir.string();
    r.read("output_dir", out);
    cfg.output_dir = out;
    r.read("seed", cfg.seed);
  }

  if (!problems.empty()) throw ConfigError(std::move(problems));
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError({path.string() + ": " + e.what()});
  }
  return parse_config(j, path.parent_path());
}

ProbeSpec make_probe(const RunConfig& cfg) {
  ProbeSpec p;
  p.omega_c = units::thz_to_angular(cfg.probe.center_thz);
  p.delta_omega = units::thz_to_angular(cfg.probe.bandwidth_thz);
  p.photons_N = cfg.probe.photons;
  p.delay_tau = units::fs_to_s(cfg.probe.delay_fs);
  if (cfg.probe.shape == "tabulated") {
    p.shape = SpectralShape::Tabulated;
    auto path = std::filesystem::path(*cfg.probe.spectrum_csv);
    if (path.is_relative()) path = cfg.base_dir / path;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open spectrum table " + path.string());
    p.spectrum = parse_spectrum_csv(in);
  }
  p.validate();
  return p;
}

DetectorEfficiency make_detector(const RunConfig& cfg) {
  return DetectorEfficiency::step(units::thz_to_angular(cfg.probe.eta_threshold_thz));
}

CrystalGeometry make_crystal(const RunConfig& cfg) {
  return CrystalGeometry(units::um_to_m(cfg.crystal.length_um), cfg.crystal.r41_pm_per_v * 1e-12,
                         units::um_to_m(cfg.crystal.waist_um), cfg.material.sellmeier,
                         units::thz_to_angular(cfg.probe.center_thz));
}

FrequencyGrid make_grid(const RunConfig& cfg) {
  return FrequencyGrid::uniform(units::thz_to_angular(cfg.grid.max_thz),
                                units::thz_to_angular(cfg.grid.step_thz));
}

squeeze::SqueezeSpec make_squeeze(const SqueezeConfig& sc, double theta_over_pi) {
  auto sq = squeeze::band_spec(sc.center_thz, sc.width_thz, sc.sinh_r,
                               theta_over_pi * std::numbers::pi);
  sq.convention = sc.m_convention == "sinh2" ? squeeze::MConvention::SinhSquared
                                             : squeeze::MConvention::SinhR;
  return sq;
}

}  // namespace eosvac
