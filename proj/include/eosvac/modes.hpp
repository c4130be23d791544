#pragma once

#include <complex>

#include "eosvac/dispersion.hpp"

namespace eosvac::modes {

struct LGModeIndex {
  int l = 0;  // azimuthal, any sign
  int p = 0;  // radial, >= 0
};

struct ModeGeometry {
  double waist = 0.0;  // m
  double k = 0.0;      // rad/m
};

/// Generalized Laguerre polynomial L_p^alpha(x) by the three-term recurrence in p.
double assoc_laguerre(int p, double alpha, double x);

/// Paraxial Laguerre-Gaussian mode LG_lp(r_perp, phi, r_par; k) in 1/m, normalized
/// to unit power in every transverse plane. Includes beam expansion, wavefront
/// curvature and the Gouy phase.
std::complex<double> lg_mode(LGModeIndex idx, const ModeGeometry& geo, double r_perp, double phi,
                             double r_par);

/// Waist-plane mode g_lp(r_perp, phi); identical to lg_mode at r_par = 0.
std::complex<double> waist_mode(LGModeIndex idx, double waist, double r_perp, double phi);

/// <a|b> over the transverse plane at r_par by Gauss-Legendre in r and the
/// trapezoid rule in phi. Throws QuadratureError if the radial rule has not
/// converged.
std::complex<double> mode_norm(LGModeIndex a, LGModeIndex b, const ModeGeometry& geo,
                               double r_par = 0.0);

/// int d^2r g00^2 g'_lp with the THz mode waist w0/sqrt(2): 1/(sqrt(pi) w0) for
/// (0,0), zero otherwise.
double pump_probe_overlap(LGModeIndex idx, double w0);

/// The same overlap by 2D quadrature (complex; the imaginary part vanishes).
std::complex<double> pump_probe_overlap_numeric(LGModeIndex idx, double w0);

/// Thin-crystal ratio l / (k_Omega w0^2 / 2), k_Omega = n_Omega Omega / c0.
/// Values >= 1 mean the paraxial thin-crystal assumption does not hold.
double paraxial_validity(const CrystalGeometry& geo, const PhononModel& phonon, double Omega);

}  // namespace eosvac::modes
