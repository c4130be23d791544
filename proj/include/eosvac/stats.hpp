#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eosvac/dispersion.hpp"
#include "eosvac/numint.hpp"
#include "eosvac/probe.hpp"
#include "eosvac/response.hpp"

namespace eosvac {

/// Balanced-detection signal statistics, in photon-count units.
struct SignalStats {
  double photons_N = 0.0;
  double var_eo = 0.0;        // multi-THz vacuum contribution
  double var_sn = 0.0;        // shot noise, equal to N
  double rms_total = 0.0;     // sqrt(var_eo + var_sn)
  double ratio_excess = 0.0;  // (rms_total - sqrt(N)) / sqrt(N)
  double kappa = 0.0;         // sqrt(var_eo) / N, independent of N
};

struct EffectiveField {
  double e_rms = 0.0;          // V/m
  double sampling_gain = 0.0;  // n^3 l omega_p r41 / c0, m/V
};

/// Statistics for a given per-photon slope kappa at photon number N.
SignalStats stats_at(double kappa, double photons_N);

/// e_rms = sqrt(hbar J / (4 pi^2 eps0 c0 n w0^2)) with J the response-weighted
/// integral, and the gain with which that field is sampled.
EffectiveField effective_vacuum_field(const ResponseTable& rt, const PhononModel& phonon,
                                      const CrystalGeometry& geo, double omega_p,
                                      const numint::QuadratureSpec& spec = {});

/// Pure-vacuum EOS variance plus shot noise. Only geo's length, r41, waist and
/// indices enter the prefactor; phase matching comes from rt.
SignalStats eos_variance_pv(const ProbeSpec& p, const DetectorEfficiency& eta,
                            const CrystalGeometry& geo, const ResponseTable& rt,
                            const PhononModel& phonon, const numint::QuadratureSpec& spec = {});

struct SweepRow {
  double photons_N;
  double ds_over_n;     // rms_total / N
  double sn_over_n;     // sqrt(N) / N
  double ratio_excess;
};

std::vector<SweepRow> sweep_photon_number(const SignalStats& base, std::span<const double> N_values);

/// Log-spaced photon numbers, endpoints included.
std::vector<double> log_space(double lo, double hi, std::size_t count);

/// N* = 1/kappa^2, where the EOS and shot-noise variances are equal; empty
/// when kappa is zero.
std::optional<double> crossover_photon_number(const SignalStats& s);

inline constexpr std::string_view kTraceGenerator = "mt19937_64+std::normal_distribution";

/// Zero-mean Gaussian per-pulse signals with variance var_eo + var_sn,
/// reproducible for a given seed.
std::vector<double> synth_traces(const SignalStats& s, std::size_t count, std::uint64_t seed);

}  // namespace eosvac
