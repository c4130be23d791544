#pragma once

#include <istream>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eosvac {

enum class SpectralShape { Rectangular, Tabulated };

/// Sampled spectral amplitude |alpha_p(omega)| (flat phase), linearly interpolated
/// between nodes and zero outside them.
struct TabulatedSpectrum {
  std::vector<double> omega;      // rad/s, strictly increasing
  std::vector<double> amplitude;  // arbitrary units, >= 0

  void validate() const;
  double operator()(double w) const;
};

/// Reads a two-column CSV (frequency_thz, amplitude). '#' lines and a
/// non-numeric header row are skipped.
TabulatedSpectrum parse_spectrum_csv(std::istream& in);

struct ProbeSpec {
  double omega_c = 0.0;      // center angular frequency
  double delta_omega = 0.0;  // full bandwidth
  SpectralShape shape = SpectralShape::Rectangular;
  double photons_N = 1.0;
  double delay_tau = 0.0;  // s
  std::optional<TabulatedSpectrum> spectrum;  // required for Tabulated

  void validate() const;

  /// Spectral amplitude at omega.
  double amplitude(double omega) const;
  /// Closed interval outside which the amplitude vanishes.
  std::pair<double, double> support() const;
  /// Frequencies where the amplitude has kinks or jumps.
  std::vector<double> kinks() const;
};

/// Rectangular probe from cyclic center/bandwidth in THz.
ProbeSpec rectangular_probe(double center_thz, double bandwidth_thz, double photons_N,
                            double delay_fs = 0.0);

/// Detector quantum efficiency eta(omega) in [0, 1]: a hard step at a threshold
/// frequency, optionally replaced by a tabulated curve.
class DetectorEfficiency {
 public:
  /// eta = 1 for omega >= threshold, 0 below.
  static DetectorEfficiency step(double threshold_omega);
  /// Default detector: step at 2 pi * 30 THz.
  static DetectorEfficiency standard();
  /// Linear interpolation of (omega, eta) samples, zero outside the table.
  static DetectorEfficiency tabulated(std::vector<double> omega, std::vector<double> eta);

  double operator()(double omega) const;

  /// True if eta == 1 everywhere on [lo, hi].
  bool unity_on(double lo, double hi) const;
  double threshold() const { return threshold_; }
  std::vector<double> kinks() const;

 private:
  double threshold_ = 0.0;
  std::vector<double> table_omega_;
  std::vector<double> table_eta_;
};

/// omega_p = int eta |alpha|^2 / int (eta/omega) |alpha|^2, by quadrature.
/// Throws DomainError when either integral vanishes.
double avg_detected_frequency(const ProbeSpec& p, const DetectorEfficiency& eta);

/// Closed form for the rectangular shape with unit efficiency:
/// delta_omega / ln(omega_hi / omega_lo).
double avg_detected_frequency_closed_form(const ProbeSpec& p);

/// Normalized Hermitian spectral autocorrelation f(Omega) = [f+^* + f-]/2.
/// Uses the triangle (1 - |Omega|/delta_omega) H(delta_omega - |Omega|) when the
/// probe is rectangular and eta is unity on its support, quadrature otherwise.
double autocorrelation_f(const ProbeSpec& p, const DetectorEfficiency& eta, double Omega);

/// Always evaluates the overlap integrals numerically.
double autocorrelation_f_numeric(const ProbeSpec& p, const DetectorEfficiency& eta, double Omega);

/// Largest |Omega| with non-zero f.
double autocorrelation_support(const ProbeSpec& p);

struct TemporalSample {
  double t;          // s
  double intensity;  // (Re E)^2 with carrier, peak-normalized
  double envelope;   // |E|^2, peak-normalized
};

/// Flat-phase pulse synthesized from the amplitude spectrum.
std::vector<TemporalSample> probe_temporal_profile(const ProbeSpec& p, std::span<const double> times);

}  // namespace eosvac
