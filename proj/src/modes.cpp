#include "eosvac/modes.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "eosvac/errors.hpp"
#include "eosvac/numint.hpp"
#include "eosvac/units.hpp"

namespace eosvac::modes {

namespace {

using cplx = std::complex<double>;

void check_index(LGModeIndex idx) {
  if (idx.p < 0) throw DomainError("LG radial index p must be >= 0");
}

double normalization(LGModeIndex idx) {
  // sqrt(2 p! / (pi (|l| + p)!))
  const int al = std::abs(idx.l);
  const double log_ratio = std::lgamma(idx.p + 1.0) - std::lgamma(al + idx.p + 1.0);
  return std::sqrt(2.0 / std::numbers::pi * std::exp(log_ratio));
}

// Integrates F(r, phi) r dr dphi over the plane with radial Gauss-Legendre on
// [0, r_max] split into panels and an n_phi-point trapezoid rule in phi.
cplx plane_integral(const std::function<cplx(double, double)>& F, double r_max, int panels,
                    int order, int n_phi) {
  const auto gl = numint::gauss_legendre(order);
  const double width = r_max / panels;
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  cplx sum = 0.0;
  for (int j = 0; j < n_phi; ++j) {
    const double phi = dphi * j;
    cplx radial = 0.0;
    for (int panel = 0; panel < panels; ++panel) {
      const double a = width * panel;
      for (int i = 0; i < order; ++i) {
        const double r = a + 0.5 * width * (gl.nodes[i] + 1.0);
        radial += 0.5 * width * gl.weights[i] * r * F(r, phi);
      }
    }
    sum += radial * dphi;
  }
  return sum;
}

cplx converged_plane_integral(const std::function<cplx(double, double)>& F, double r_max,
                              int n_phi, double scale) {
  const cplx coarse = plane_integral(F, r_max, 8, 24, n_phi);
  const cplx fine = plane_integral(F, r_max, 16, 24, n_phi);
  const double diff = std::abs(fine - coarse);
  if (diff > 1e-11 * std::max(scale, std::abs(fine))) {
    throw QuadratureError("transverse overlap quadrature did not converge", std::abs(fine), diff);
  }
  return fine;
}

}  // namespace

double assoc_laguerre(int p, double alpha, double x) {
  if (p < 0) throw DomainError("Laguerre degree must be >= 0");
  double prev = 1.0;
  if (p == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < p; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> lg_mode(LGModeIndex idx, const ModeGeometry& geo, double r_perp, double phi,
                             double r_par) {
  check_index(idx);
  if (!(geo.waist > 0.0)) throw DomainError("mode waist must be > 0");
  if (r_par != 0.0 && !(geo.k > 0.0)) throw DomainError("mode wavenumber must be > 0");
  const int al = std::abs(idx.l);
  const double rayleigh = 0.5 * geo.k * geo.waist * geo.waist;
  double w = geo.waist;
  double inv_curvature = 0.0;
  double gouy = 0.0;
  if (r_par != 0.0) {
    const double zr = r_par / rayleigh;
    w = geo.waist * std::sqrt(1.0 + zr * zr);
    inv_curvature = r_par / (r_par * r_par + rayleigh * rayleigh);
    gouy = -(2.0 * idx.p + al + 1.0) * std::atan(zr);
  }
  const double rho = r_perp / w;
  const double x = 2.0 * rho * rho;
  const double amplitude = normalization(idx) / w * std::pow(std::sqrt(2.0) * rho, al) *
                           assoc_laguerre(idx.p, al, x) * std::exp(-rho * rho);
  const double phase = idx.l * phi + 0.5 * geo.k * r_perp * r_perp * inv_curvature + gouy;
  return std::polar(amplitude, phase);
}

std::complex<double> waist_mode(LGModeIndex idx, double waist, double r_perp, double phi) {
  return lg_mode(idx, ModeGeometry{waist, 0.0}, r_perp, phi, 0.0);
}

std::complex<double> mode_norm(LGModeIndex a, LGModeIndex b, const ModeGeometry& geo,
                               double r_par) {
  check_index(a);
  check_index(b);
  double w = geo.waist;
  if (r_par != 0.0) {
    const double rayleigh = 0.5 * geo.k * geo.waist * geo.waist;
    w *= std::sqrt(1.0 + (r_par / rayleigh) * (r_par / rayleigh));
  }
  // The phi integrand is a trigonometric polynomial of degree |l_a - l_b|.
  const int n_phi = 2 * (std::abs(a.l - b.l) + 1) + 2;
  const auto F = [&](double r, double phi) {
    return std::conj(lg_mode(a, geo, r, phi, r_par)) * lg_mode(b, geo, r, phi, r_par);
  };
  return converged_plane_integral(F, 8.0 * w, n_phi, 1.0);
}

double pump_probe_overlap(LGModeIndex idx, double w0) {
  check_index(idx);
  if (!(w0 > 0.0)) throw DomainError("probe waist must be > 0");
  if (idx.l != 0 || idx.p != 0) return 0.0;
  return 1.0 / (std::sqrt(std::numbers::pi) * w0);
}

std::complex<double> pump_probe_overlap_numeric(LGModeIndex idx, double w0) {
  check_index(idx);
  if (!(w0 > 0.0)) throw DomainError("probe waist must be > 0");
  const double thz_waist = w0 / std::sqrt(2.0);
  const int n_phi = 2 * (std::abs(idx.l) + 1) + 2;
  const auto F = [&](double r, double phi) {
    const cplx g00 = waist_mode({0, 0}, w0, r, phi);
    return g00 * g00 * waist_mode(idx, thz_waist, r, phi);
  };
  return converged_plane_integral(F, 8.0 * w0, n_phi, 1.0 / w0);
}

double paraxial_validity(const CrystalGeometry& geo, const PhononModel& phonon, double Omega) {
  if (!(Omega > 0.0)) throw DomainError("paraxial validity needs Omega > 0");
  const double k = n_thz(phonon, Omega) * Omega / units::c0;
  return geo.length() / (0.5 * k * geo.waist() * geo.waist());
}

}  // namespace eosvac::modes
