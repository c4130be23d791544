#pragma once

#include <numbers>

// Physical constants (CODATA 2018) and the handful of unit conversions used at
// I/O boundaries. Everything inside the library is SI with angular frequencies.
namespace eosvac::units {

inline constexpr double c0 = 2.99792458e8;        // m/s
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double eps0 = 8.8541878128e-12;  // F/m

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

double thz_to_angular(double nu_thz);
double angular_to_thz(double omega);

// Spectroscopic wavenumber (cm^-1) to angular frequency: 2 pi c0 k * 100.
double wavenumber_cm_to_angular(double k_cm);
double angular_to_wavenumber_cm(double omega);

inline constexpr double fs_to_s(double t_fs) { return t_fs * 1e-15; }
inline constexpr double s_to_fs(double t_s) { return t_s * 1e15; }

inline constexpr double um_to_m(double x_um) { return x_um * 1e-6; }
inline constexpr double m_to_um(double x_m) { return x_m * 1e6; }

}  // namespace eosvac::units
