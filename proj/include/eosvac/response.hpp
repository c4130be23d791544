#pragma once

#include <vector>

#include "eosvac/dispersion.hpp"
#include "eosvac/numint.hpp"
#include "eosvac/probe.hpp"

namespace eosvac {

/// Uniform grid on [0, omega_max] (angular frequencies).
class FrequencyGrid {
 public:
  /// Points 0, step, ..., up to the first multiple of step reaching omega_max.
  static FrequencyGrid uniform(double omega_max, double step);
  /// 0 to 2 pi * 160 THz in 2 pi * 0.05 THz steps.
  static FrequencyGrid standard();

  std::size_t size() const { return count_; }
  double spacing() const { return step_; }
  double at(std::size_t i) const { return step_ * static_cast<double>(i); }
  double max() const { return at(count_ - 1); }
  std::vector<double> points() const;

 private:
  FrequencyGrid(double step, std::size_t count) : step_(step), count_(count) {}
  double step_;
  std::size_t count_;
};

/// sin(x)/x with sinc(0) = 1 and a series branch near zero.
double sinc(double x);

/// Phase-matching factor sinc(l Omega (n_Omega - n_g) / (2 c0)).
double phase_matching_sinc(const CrystalGeometry& geo, const PhononModel& phonon, double Omega);

/// Highest Omega where lambda(Omega)/(2 n_Omega) = w0; every lower frequency is
/// treated as lost to diffraction. Throws RootFindingError if no crossing exists.
double diffraction_cutoff(const PhononModel& phonon, double waist, double search_max);

/// Continuous R0(Omega) = sinc * f, zeroed below the cutoff when enabled.
class ResponseModel {
 public:
  ResponseModel(ProbeSpec probe, DetectorEfficiency eta, CrystalGeometry geo, PhononModel phonon,
                const FrequencyGrid& grid, bool cutoff_enabled);

  double operator()(double Omega) const;
  double f(double Omega) const;
  double sinc_factor(double Omega) const;

  double cutoff_omega() const { return cutoff_omega_; }
  bool cutoff_enabled() const { return cutoff_enabled_; }
  /// Upper edge of the response support (f vanishes beyond).
  double support_max() const { return support_max_; }
  /// Frequencies where R0 or n_Omega is non-smooth or sharply structured.
  std::vector<double> breakpoints() const;

  const ProbeSpec& probe() const { return probe_; }
  const DetectorEfficiency& eta() const { return eta_; }
  const CrystalGeometry& geometry() const { return geo_; }
  const PhononModel& phonon() const { return phonon_; }

 private:
  ProbeSpec probe_;
  DetectorEfficiency eta_;
  CrystalGeometry geo_;
  PhononModel phonon_;
  bool cutoff_enabled_;
  double cutoff_omega_ = 0.0;
  double support_max_ = 0.0;
  bool closed_form_f_ = true;
  // f sampled on the grid when no closed form applies.
  double f_step_ = 0.0;
  std::vector<double> f_samples_;
};

/// R0 tabulated on a grid, together with the model that produced it.
struct ResponseTable {
  ResponseModel model;
  FrequencyGrid grid;
  std::vector<double> f;
  std::vector<double> sinc;
  std::vector<double> values;  // R0
  double cutoff_omega = 0.0;   // 0 when disabled
  bool cutoff_enabled = false;
};

/// Samples R0 on the grid. The grid must reach the autocorrelation support.
ResponseTable build_response(const ProbeSpec& p, const DetectorEfficiency& eta,
                             const CrystalGeometry& geo, const PhononModel& phonon,
                             const FrequencyGrid& grid, bool cutoff_enabled);

/// Omega (n / n_Omega) R0^2 at each grid point.
std::vector<double> variance_integrand(const ResponseTable& rt, const PhononModel& phonon, double n);

/// int_0^inf Omega (n / n_Omega) |R|^2 dOmega from the continuous model. A
/// fixed-grid spec with grid_step 0 uses the table spacing.
numint::QuadratureResult variance_integral(const ResponseTable& rt, const PhononModel& phonon,
                                           double n, numint::QuadratureSpec spec);

/// Same integral by Simpson over the tabulated integrand (step at the cutoff
/// is resolved only to grid accuracy).
double variance_integral_tabulated(const ResponseTable& rt, const PhononModel& phonon, double n);

}  // namespace eosvac
