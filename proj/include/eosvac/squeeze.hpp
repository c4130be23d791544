#pragma once

#include <vector>

#include "eosvac/dispersion.hpp"
#include "eosvac/numint.hpp"
#include "eosvac/response.hpp"

namespace eosvac::squeeze {

/// How the squeeze parameter M is obtained from the squeeze factor r.
enum class MConvention {
  SinhR,        // M = sinh r
  SinhSquared,  // M = sinh^2 r, the mean photon number of squeezed vacuum
};

/// Constant squeezing xi = r e^{i theta} on [omega1, omega2], none outside.
struct SqueezeSpec {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double r = 0.0;
  double theta = 0.0;
  MConvention convention = MConvention::SinhR;

  double omega_c() const { return 0.5 * (omega1 + omega2); }
  double M() const;
  void validate() const;
};

/// Band centered at center_thz with the given width, and sinh r = sinh_r.
SqueezeSpec band_spec(double center_thz, double width_thz, double sinh_r, double theta);

/// 40 THz center, width equal to the center, sinh r = 2, theta = 0.
SqueezeSpec default_band();

struct SqueezeCoefficients {
  double I = 0.0;
  double Ia = 0.0;
  double Ib = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// varrho(Omega) = sqrt(Omega / n_Omega) R0(Omega), zero outside the response.
double varrho(const ResponseTable& rt, const PhononModel& phonon, double Omega);

/// I = int varrho^2, Ia = int_band varrho^2, Ib = int_band varrho(W) varrho(2 Wc - W).
/// Throws DomainError when I vanishes.
SqueezeCoefficients squeeze_coefficients(const ResponseTable& rt, const PhononModel& phonon,
                                         const SqueezeSpec& sq,
                                         numint::QuadratureSpec spec = {});

/// <S_eo^2>_sv(tau) / <S_eo^2>_pv = 1 + 2aM + 2b sqrt(M(M+1)) cos(theta - 2 Wc tau).
double sv_variance_ratio(const SqueezeCoefficients& c, const SqueezeSpec& sq, double tau);

struct Extrema {
  double min = 1.0;
  double max = 1.0;
};

Extrema sv_extrema(const SqueezeCoefficients& c, double M);

/// Period of the delay dependence, pi / Wc.
double sv_period(const SqueezeSpec& sq);

enum class OptimumKind { Interior, LowerBoundary, UpperBoundary };

struct OptimalSqueeze {
  double M_opt = 0.0;
  double ratio = 1.0;
  OptimumKind kind = OptimumKind::Interior;
};

/// Minimizes 1 + 2aM - 2b sqrt(M(M+1)) over [M_lo, M_hi] by solving the
/// stationarity condition. Without a stationary point inside the interval the
/// best boundary is returned and flagged.
OptimalSqueeze optimal_squeeze(const SqueezeCoefficients& c, double M_lo, double M_hi);

/// Uncertainty ellipse in units of the vacuum radius: the axis-aligned ellipse
/// (semi_x, semi_y) rotated by `rotation`, with rotation in (-pi/4, pi/4].
struct Ellipse {
  double semi_x = 1.0;
  double semi_y = 1.0;
  double rotation = 0.0;
};

Ellipse quadrature_ellipse(double r, double theta);

struct Point {
  double x;
  double y;
};

/// Closed contour sampled at `count` points (first point repeated at the end).
std::vector<Point> ellipse_contour(const Ellipse& e, std::size_t count);

}  // namespace eosvac::squeeze
