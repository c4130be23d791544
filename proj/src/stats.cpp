#include "eosvac/stats.hpp"

#include <cmath>
#include <random>

#include "eosvac/errors.hpp"
#include "eosvac/units.hpp"

namespace eosvac {

SignalStats stats_at(double kappa, double photons_N) {
  if (!(photons_N > 0.0)) throw DomainError("photon number must be > 0");
  SignalStats s;
  s.photons_N = photons_N;
  s.kappa = kappa;
  const double rms_eo = kappa * photons_N;
  s.var_eo = rms_eo * rms_eo;
  s.var_sn = photons_N;
  s.rms_total = std::sqrt(s.var_eo + s.var_sn);
  const double rms_sn = std::sqrt(photons_N);
  s.ratio_excess = (s.rms_total - rms_sn) / rms_sn;
  return s;
}

EffectiveField effective_vacuum_field(const ResponseTable& rt, const PhononModel& phonon,
                                      const CrystalGeometry& geo, double omega_p,
                                      const numint::QuadratureSpec& spec) {
  using namespace units;
  const double n = geo.n();
  const double integral = variance_integral(rt, phonon, n, spec).value;
  const double w0 = geo.waist();
  EffectiveField e;
  e.e_rms = std::sqrt(hbar * integral / (4.0 * pi * pi * eps0 * c0 * n * w0 * w0));
  e.sampling_gain = n * n * n * geo.length() * omega_p * geo.r41() / c0;
  return e;
}

SignalStats eos_variance_pv(const ProbeSpec& p, const DetectorEfficiency& eta,
                            const CrystalGeometry& geo, const ResponseTable& rt,
                            const PhononModel& phonon, const numint::QuadratureSpec& spec) {
  p.validate();
  const double omega_p = avg_detected_frequency(p, eta);
  const auto field = effective_vacuum_field(rt, phonon, geo, omega_p, spec);
  return stats_at(std::abs(field.sampling_gain) * field.e_rms, p.photons_N);
}

std::vector<SweepRow> sweep_photon_number(const SignalStats& base, std::span<const double> N_values) {
  std::vector<SweepRow> rows;
  rows.reserve(N_values.size());
  for (double N : N_values) {
    const auto s = stats_at(base.kappa, N);
    rows.push_back({N, s.rms_total / N, std::sqrt(N) / N, s.ratio_excess});
  }
  return rows;
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("log_space needs 0 < lo <= hi");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::optional<double> crossover_photon_number(const SignalStats& s) {
  if (!(s.kappa > 0.0)) return std::nullopt;
  return 1.0 / (s.kappa * s.kappa);
}

std::vector<double> synth_traces(const SignalStats& s, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw DomainError("trace count must be >= 1");
  std::vector<double> out(count, 0.0);
  const double sigma = std::sqrt(s.var_eo + s.var_sn);
  if (sigma == 0.0) return out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, sigma);
  for (auto& x : out) x = dist(rng);
  return out;
}

}  // namespace eosvac
