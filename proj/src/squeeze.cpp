#include "eosvac/squeeze.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eosvac/errors.hpp"
#include "eosvac/units.hpp"

namespace eosvac::squeeze {

double SqueezeSpec::M() const {
  const double s = std::sinh(r);
  return convention == MConvention::SinhR ? s : s * s;
}

void SqueezeSpec::validate() const {
  if (!(omega1 > 0.0)) throw DomainError("squeeze band lower edge must be > 0");
  if (!(omega2 > omega1)) throw DomainError("squeeze band upper edge must exceed the lower edge");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeeze factor r must be >= 0");
  if (!(theta > -std::numbers::pi && theta <= std::numbers::pi)) {
    throw DomainError("squeeze phase theta must lie in (-pi, pi]");
  }
}

SqueezeSpec band_spec(double center_thz, double width_thz, double sinh_r, double theta) {
  SqueezeSpec sq;
  sq.omega1 = units::thz_to_angular(center_thz - 0.5 * width_thz);
  sq.omega2 = units::thz_to_angular(center_thz + 0.5 * width_thz);
  sq.r = std::asinh(sinh_r);
  sq.theta = theta;
  return sq;
}

SqueezeSpec default_band() { return band_spec(40.0, 40.0, 2.0, 0.0); }

double varrho(const ResponseTable& rt, const PhononModel& phonon, double Omega) {
  if (!(Omega > 0.0)) return 0.0;
  const double R = rt.model(Omega);
  if (R == 0.0) return 0.0;
  return std::sqrt(Omega / n_thz(phonon, Omega)) * R;
}

SqueezeCoefficients squeeze_coefficients(const ResponseTable& rt, const PhononModel& phonon,
                                         const SqueezeSpec& sq, numint::QuadratureSpec spec) {
  if (spec.method == numint::Method::FixedGridSimpson && spec.grid_step == 0.0) {
    spec.grid_step = rt.grid.spacing();
  }
  if (!(sq.omega2 >= sq.omega1) || !(sq.omega1 >= 0.0)) {
    throw DomainError("squeeze band must satisfy 0 <= omega1 <= omega2");
  }
  const double wc2 = 2.0 * sq.omega_c();
  std::vector<double> breaks = rt.model.breakpoints();
  const std::size_t base = breaks.size();
  for (std::size_t i = 0; i < base; ++i) breaks.push_back(wc2 - breaks[i]);

  const auto rho2 = [&](double W) {
    const double v = varrho(rt, phonon, W);
    return v * v;
  };
  const double lo_full = rt.cutoff_enabled ? rt.cutoff_omega : 0.0;
  SqueezeCoefficients c;
  c.I = numint::integrate_1d(rho2, lo_full, rt.model.support_max(), spec, breaks).value;
  if (!(c.I > 0.0)) throw DomainError("response vanishes identically: I = 0");
  c.Ia = numint::integrate_1d(rho2, sq.omega1, sq.omega2, spec, breaks).value;
  c.Ib = numint::integrate_1d(
             [&](double W) { return varrho(rt, phonon, W) * varrho(rt, phonon, wc2 - W); },
             sq.omega1, sq.omega2, spec, breaks)
             .value;
  c.a = c.Ia / c.I;
  c.b = c.Ib / c.I;
  return c;
}

double sv_variance_ratio(const SqueezeCoefficients& c, const SqueezeSpec& sq, double tau) {
  const double M = sq.M();
  return 1.0 + 2.0 * c.a * M +
         2.0 * c.b * std::sqrt(M * (M + 1.0)) * std::cos(sq.theta - 2.0 * sq.omega_c() * tau);
}

Extrema sv_extrema(const SqueezeCoefficients& c, double M) {
  if (!(M >= 0.0)) throw DomainError("squeeze parameter M must be >= 0");
  const double mean = 1.0 + 2.0 * c.a * M;
  const double swing = 2.0 * std::abs(c.b) * std::sqrt(M * (M + 1.0));
  return {mean - swing, mean + swing};
}

double sv_period(const SqueezeSpec& sq) { return std::numbers::pi / sq.omega_c(); }

OptimalSqueeze optimal_squeeze(const SqueezeCoefficients& c, double M_lo, double M_hi) {
  if (!(M_lo >= 0.0) || !(M_hi > M_lo)) throw DomainError("M search interval must be 0 <= lo < hi");
  const auto floor_at = [&](double M) { return sv_extrema(c, M).min; };
  // d/dM [1 + 2aM - 2b sqrt(M(M+1))] = 2a - b (2M+1)/sqrt(M(M+1)); the second
  // term falls monotonically from +inf to 2b, so a root exists only for a > b > 0.
  const auto slope = [&](double M) {
    return 2.0 * c.a - c.b * (2.0 * M + 1.0) / std::sqrt(M * (M + 1.0));
  };
  const auto boundary = [&]() {
    const double lo = floor_at(M_lo);
    const double hi = floor_at(M_hi);
    return lo <= hi ? OptimalSqueeze{M_lo, lo, OptimumKind::LowerBoundary}
                    : OptimalSqueeze{M_hi, hi, OptimumKind::UpperBoundary};
  };
  if (!(c.b > 0.0)) return boundary();
  const double lo = std::max(M_lo, 1e-300);
  const double s_lo = slope(lo);
  const double s_hi = slope(M_hi);
  if (!(s_lo < 0.0 && s_hi > 0.0)) return boundary();
  const double M = numint::find_root(slope, lo, M_hi, 1e-13 * std::max(1.0, M_hi));
  return {M, floor_at(M), OptimumKind::Interior};
}

Ellipse quadrature_ellipse(double r, double theta) {
  if (!(r >= 0.0)) throw DomainError("squeeze factor r must be >= 0");
  // theta = 0 squeezes Y; the squeezed axis turns by theta / 2.
  double rotation = std::remainder(0.5 * theta, std::numbers::pi);
  double sx = std::exp(r);
  double sy = std::exp(-r);
  if (rotation > std::numbers::pi / 4) {
    rotation -= std::numbers::pi / 2;
    std::swap(sx, sy);
  } else if (rotation <= -std::numbers::pi / 4) {
    rotation += std::numbers::pi / 2;
    std::swap(sx, sy);
  }
  return {sx, sy, rotation};
}

std::vector<Point> ellipse_contour(const Ellipse& e, std::size_t count) {
  if (count < 3) throw DomainError("contour needs at least 3 points");
  std::vector<Point> pts(count + 1);
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
    const double x = e.semi_x * std::cos(t);
    const double y = e.semi_y * std::sin(t);
    pts[i] = {c * x - s * y, s * x + c * y};
  }
  pts[count] = pts[0];
  return pts;
}

}  // namespace eosvac::squeeze
