#include "eosvac/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eosvac/errors.hpp"
#include "eosvac/modes.hpp"
#include "eosvac/output.hpp"
#include "eosvac/units.hpp"

namespace eosvac::commands {

using nlohmann::ordered_json;
using output::CsvDocument;

namespace {

struct Scenario {
  ProbeSpec probe;
  DetectorEfficiency eta;
  CrystalGeometry geo;
  PhononModel phonon;
  ResponseTable rt;
};

Scenario build_scenario(const RunConfig& cfg) {
  auto probe = make_probe(cfg);
  auto eta = make_detector(cfg);
  auto geo = make_crystal(cfg);
  const auto& phonon = cfg.material.phonon;
  auto rt = build_response(probe, eta, geo, phonon, make_grid(cfg), cfg.cutoff_enabled);
  return {std::move(probe), std::move(eta), std::move(geo), phonon, std::move(rt)};
}

CsvDocument stamped(const RunConfig& cfg, std::string_view command,
                    std::vector<std::string> columns) {
  CsvDocument doc(std::move(columns));
  output::stamp(doc, command, cfg.to_json(), cfg.hash());
  return doc;
}

ordered_json meta_json(const RunConfig& cfg, std::string_view command) {
  ordered_json m;
  m["generator"] = "eosvac";
  m["command"] = command;
  m["config_hash"] = cfg.hash();
  m["config"] = cfg.to_json();
  return m;
}

std::vector<double> frequency_range(double lo, double hi, double step) {
  std::vector<double> out;
  if (hi < lo) return out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

std::string theta_tag(double theta_over_pi) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%gpi", theta_over_pi);
  return buf;
}

numint::QuadratureSpec simpson_check_spec() {
  numint::QuadratureSpec s;
  s.method = numint::Method::FixedGridSimpson;
  s.rel_tol = 1e-8;
  return s;
}

}  // namespace

DispersionResult cmd_dispersion(const RunConfig& cfg) {
  const auto& d = cfg.dispersion;
  DispersionResult res;

  auto nir = stamped(cfg, "dispersion", {"freq_thz", "n"});
  nir.meta("model", "sellmeier");
  for (double f : frequency_range(d.nir_min_thz, d.nir_max_thz, d.nir_step_thz)) {
    nir.row({f, n_nir(cfg.material.sellmeier, units::thz_to_angular(f))});
  }
  res.nir_csv = cfg.output_dir / "dispersion_nir.csv";
  res.nir_rows = nir.rows();
  output::write_atomic(res.nir_csv, nir.str());

  auto thz = stamped(cfg, "dispersion", {"freq_thz", "n"});
  thz.meta("model", "phonon_polariton");
  for (double f : frequency_range(d.thz_min_thz, d.thz_max_thz, d.thz_step_thz)) {
    thz.row({f, n_thz(cfg.material.phonon, units::thz_to_angular(f))});
  }
  res.thz_csv = cfg.output_dir / "dispersion_thz.csv";
  res.thz_rows = thz.rows();
  output::write_atomic(res.thz_csv, thz.str());
  return res;
}

ResponseResult cmd_response(const RunConfig& cfg) {
  const auto sc = build_scenario(cfg);
  const double n = sc.geo.n();
  const auto integrand = variance_integrand(sc.rt, sc.phonon, n);

  ResponseResult res;
  res.cutoff_omega = sc.rt.cutoff_omega;
  res.integral = variance_integral(sc.rt, sc.phonon, n, {}).value;
  res.integral_tabulated = variance_integral_tabulated(sc.rt, sc.phonon, n);

  auto doc = stamped(cfg, "response", {"omega_thz", "f", "sinc", "R", "integrand"});
  doc.meta("cutoff_enabled", cfg.cutoff_enabled ? "true" : "false");
  doc.meta("cutoff_thz", units::angular_to_thz(res.cutoff_omega));
  doc.meta("n", n);
  doc.meta("n_g", sc.geo.n_g());
  doc.meta("integral", res.integral);
  doc.meta("integral_tabulated", res.integral_tabulated);
  if (cfg.cutoff_enabled) {
    const double ratio = modes::paraxial_validity(sc.geo, sc.phonon, res.cutoff_omega);
    doc.meta("paraxial_ratio_at_cutoff", ratio);
  }
  for (std::size_t i = 0; i < sc.rt.grid.size(); ++i) {
    doc.row({units::angular_to_thz(sc.rt.grid.at(i)), sc.rt.f[i], sc.rt.sinc[i], sc.rt.values[i],
             integrand[i]});
  }
  res.csv = cfg.output_dir / "response.csv";
  output::write_atomic(res.csv, doc.str());

  std::vector<double> times;
  for (int i = -1250; i <= 1250; ++i) times.push_back(units::fs_to_s(0.02 * i));
  auto pulse = stamped(cfg, "response", {"t_fs", "intensity", "envelope"});
  pulse.meta("center_thz", cfg.probe.center_thz);
  pulse.meta("bandwidth_thz", cfg.probe.bandwidth_thz);
  for (const auto& s : probe_temporal_profile(sc.probe, times)) {
    pulse.row({units::s_to_fs(s.t), s.intensity, s.envelope});
  }
  res.temporal_csv = cfg.output_dir / "probe_temporal.csv";
  output::write_atomic(res.temporal_csv, pulse.str());
  return res;
}

VarianceResult cmd_variance(const RunConfig& cfg) {
  const auto sc = build_scenario(cfg);
  VarianceResult res;
  res.omega_p = avg_detected_frequency(sc.probe, sc.eta);
  res.stats = eos_variance_pv(sc.probe, sc.eta, sc.geo, sc.rt, sc.phonon);
  res.field = effective_vacuum_field(sc.rt, sc.phonon, sc.geo, res.omega_p);
  res.n_star = crossover_photon_number(res.stats);
  res.integral = variance_integral(sc.rt, sc.phonon, sc.geo.n(), {}).value;
  res.integral_simpson = variance_integral(sc.rt, sc.phonon, sc.geo.n(), simpson_check_spec()).value;

  const auto Ns = log_space(cfg.sweep.n_min, cfg.sweep.n_max, cfg.sweep.points);
  auto doc = stamped(cfg, "variance", {"n_photons", "ds_over_n", "sn_over_n", "excess"});
  doc.meta("kappa", res.stats.kappa);
  for (const auto& r : sweep_photon_number(res.stats, Ns)) {
    doc.row({r.photons_N, r.ds_over_n, r.sn_over_n, r.ratio_excess});
  }
  res.sweep_csv = cfg.output_dir / "photon_sweep.csv";
  output::write_atomic(res.sweep_csv, doc.str());

  ordered_json j;
  j["meta"] = meta_json(cfg, "variance");
  j["kappa"] = res.stats.kappa;
  j["e_rms_v_per_m"] = res.field.e_rms;
  j["sampling_gain_m_per_v"] = res.field.sampling_gain;
  j["n_star"] = res.n_star ? ordered_json(*res.n_star) : ordered_json(nullptr);
  j["photons"] = res.stats.photons_N;
  j["var_eo"] = res.stats.var_eo;
  j["var_sn"] = res.stats.var_sn;
  j["rms_total"] = res.stats.rms_total;
  j["ratio_excess"] = res.stats.ratio_excess;
  j["omega_p_thz"] = units::angular_to_thz(res.omega_p);
  j["integral"] = res.integral;
  j["integral_simpson"] = res.integral_simpson;
  j["cutoff_thz"] = units::angular_to_thz(sc.rt.cutoff_omega);
  res.summary_json = cfg.output_dir / "variance_summary.json";
  output::write_atomic(res.summary_json, j.dump(2) + "\n");
  return res;
}

SqueezeResult cmd_squeeze(const RunConfig& cfg) {
  if (!cfg.squeeze) throw ConfigError({"squeeze: section missing"});
  const auto& q = *cfg.squeeze;
  const auto sc = build_scenario(cfg);

  SqueezeResult res;
  const auto base = make_squeeze(q, q.theta_over_pi.front());
  res.coefficients = squeeze::squeeze_coefficients(sc.rt, sc.phonon, base);
  const auto simpson = squeeze::squeeze_coefficients(sc.rt, sc.phonon, base, simpson_check_spec());
  res.M = base.M();
  res.extrema = squeeze::sv_extrema(res.coefficients, res.M);
  res.optimum = squeeze::optimal_squeeze(res.coefficients, 0.0, q.m_search_max);

  const double period = squeeze::sv_period(base);
  const double span = q.periods * period;
  const double step = units::fs_to_s(q.tau_step_fs);
  const auto steps = static_cast<long long>(std::ceil(span / step - 1e-9));

  for (double t : q.theta_over_pi) {
    const auto sq = make_squeeze(q, t);
    ThetaTrace tr;
    tr.theta = sq.theta;
    auto doc = stamped(cfg, "squeeze", {"tau_fs", "ratio"});
    doc.meta("theta_over_pi", t);
    doc.meta("M", res.M);
    doc.meta("period_fs", units::s_to_fs(period));
    tr.min_ratio = std::numeric_limits<double>::infinity();
    tr.max_ratio = -std::numeric_limits<double>::infinity();
    for (long long i = 0; i <= steps; ++i) {
      const double tau = -0.5 * span + step * static_cast<double>(i);
      const double ratio = squeeze::sv_variance_ratio(res.coefficients, sq, tau);
      tr.min_ratio = std::min(tr.min_ratio, ratio);
      tr.max_ratio = std::max(tr.max_ratio, ratio);
      doc.row({units::s_to_fs(tau), ratio});
    }
    tr.ratio_at_probe_delay = squeeze::sv_variance_ratio(res.coefficients, sq, sc.probe.delay_tau);
    tr.csv = cfg.output_dir / ("squeeze_theta" + theta_tag(t) + ".csv");
    output::write_atomic(tr.csv, doc.str());
    res.traces.push_back(tr);

    auto ell = stamped(cfg, "squeeze", {"x", "y"});
    ell.meta("theta_over_pi", t);
    for (const auto& p : squeeze::ellipse_contour(squeeze::quadrature_ellipse(sq.r, sq.theta),
                                                  q.ellipse_points)) {
      ell.row({p.x, p.y});
    }
    const auto ell_path = cfg.output_dir / ("ellipse_theta" + theta_tag(t) + ".csv");
    output::write_atomic(ell_path, ell.str());
    res.ellipse_csvs.push_back(ell_path);
  }
  {
    auto ell = stamped(cfg, "squeeze", {"x", "y"});
    ell.meta("state", "pure_vacuum");
    for (const auto& p : squeeze::ellipse_contour(squeeze::quadrature_ellipse(0.0, 0.0),
                                                  q.ellipse_points)) {
      ell.row({p.x, p.y});
    }
    const auto ell_path = cfg.output_dir / "ellipse_pv.csv";
    output::write_atomic(ell_path, ell.str());
    res.ellipse_csvs.push_back(ell_path);
  }

  ordered_json j;
  j["meta"] = meta_json(cfg, "squeeze");
  const auto& c = res.coefficients;
  j["coefficients"] = {{"I", c.I}, {"Ia", c.Ia}, {"Ib", c.Ib}, {"a", c.a}, {"b", c.b}};
  j["coefficients_simpson"] = {
      {"I", simpson.I}, {"Ia", simpson.Ia}, {"Ib", simpson.Ib}, {"a", simpson.a}, {"b", simpson.b}};
  j["M"] = res.M;
  j["m_convention"] = q.m_convention;
  j["period_fs"] = units::s_to_fs(period);
  j["extrema"] = {{"min", res.extrema.min}, {"max", res.extrema.max}};
  const char* kind = res.optimum.kind == squeeze::OptimumKind::Interior        ? "interior"
                     : res.optimum.kind == squeeze::OptimumKind::LowerBoundary ? "lower_boundary"
                                                                              : "upper_boundary";
  j["optimum"] = {{"M", res.optimum.M_opt}, {"ratio", res.optimum.ratio}, {"kind", kind}};
  ordered_json traces = ordered_json::array();
  for (std::size_t i = 0; i < res.traces.size(); ++i) {
    const auto& tr = res.traces[i];
    traces.push_back({{"theta_over_pi", q.theta_over_pi[i]},
                      {"file", tr.csv.filename().string()},
                      {"min", tr.min_ratio},
                      {"max", tr.max_ratio},
                      {"ratio_at_probe_delay", tr.ratio_at_probe_delay}});
  }
  j["traces"] = traces;
  res.summary_json = cfg.output_dir / "squeeze_summary.json";
  output::write_atomic(res.summary_json, j.dump(2) + "\n");
  return res;
}

TracesResult cmd_traces(const RunConfig& cfg, std::size_t count) {
  const auto sc = build_scenario(cfg);
  const auto stats = eos_variance_pv(sc.probe, sc.eta, sc.geo, sc.rt, sc.phonon);
  const auto samples = synth_traces(stats, count, cfg.seed);

  TracesResult res;
  res.count = count;
  res.variance = stats.var_eo + stats.var_sn;
  auto doc = stamped(cfg, "traces", {"pulse_index", "signal"});
  doc.meta("seed", std::to_string(cfg.seed));
  doc.meta("rng", kTraceGenerator);
  doc.meta("count", std::to_string(count));
  doc.meta("variance", res.variance);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    doc.row(static_cast<long long>(i), {samples[i]});
  }
  res.csv = cfg.output_dir / "traces.csv";
  output::write_atomic(res.csv, doc.str());
  return res;
}

}  // namespace eosvac::commands
