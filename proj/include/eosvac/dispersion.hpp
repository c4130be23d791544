#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace eosvac {

/// NIR Sellmeier model n^2 = A + B*lambda^2/(lambda^2 - c2), lambda in um.
struct SellmeierModel {
  double A = 4.27;
  double B = 3.01;
  double c2_um2 = 0.142;

  void validate() const;
};

/// THz phonon-polariton model with one damped TO resonance.
/// All frequencies are angular (rad/s).
struct PhononModel {
  double omega_to = 0.0;
  double omega_lo = 0.0;
  double gamma = 0.0;
  double eps_inf = 0.0;

  void validate() const;
};

struct Material {
  std::string name;
  SellmeierModel sellmeier;
  PhononModel phonon;
};

/// ZnTe parameters: Sellmeier A=4.27, B=3.01, c2=0.142 um^2; TO 177 cm^-1,
/// LO 206 cm^-1, damping 3.01 cm^-1, eps_inf 6.7.
Material znte();

/// Named entry from the built-in material table; throws DomainError if unknown.
Material material_by_name(std::string_view name);

// Vacuum wavelength in um for an angular frequency.
double wavelength_um(double omega);

/// NIR refractive index. Throws DomainError for omega <= 0 or lambda^2 <= c2.
double n_nir(const SellmeierModel& model, double omega);

/// Group index n + omega dn/domega from the analytic Sellmeier derivative.
double group_index(const SellmeierModel& model, double omega);

/// Complex THz index, principal branch (Im >= 0 for a passive medium).
std::complex<double> n_thz_complex(const PhononModel& model, double Omega);

/// Real part of the THz refractive index.
double n_thz(const PhononModel& model, double Omega);

struct ProbeIndices {
  double n = 0.0;    // phase index at the probe center
  double n_g = 0.0;  // group index at the probe center
};

ProbeIndices probe_indices(const SellmeierModel& model, double omega_c);

/// Crystal plate plus the NIR indices evaluated at the probe center. The indices
/// are only ever produced from a Sellmeier model, so they cannot drift from omega_c.
class CrystalGeometry {
 public:
  CrystalGeometry(double length, double r41, double waist, const SellmeierModel& model,
                  double omega_c);

  double length() const { return length_; }
  double r41() const { return r41_; }
  double waist() const { return waist_; }
  double n() const { return indices_.n; }
  double n_g() const { return indices_.n_g; }
  double omega_c() const { return omega_c_; }
  const SellmeierModel& sellmeier() const { return sellmeier_; }

  // Effective coupling d = -n^4 r41.
  double coupling_d() const;

  CrystalGeometry with_length(double length) const;
  CrystalGeometry with_r41(double r41) const;
  CrystalGeometry with_waist(double waist) const;
  CrystalGeometry at_center(double omega_c) const;

 private:
  double length_;
  double r41_;
  double waist_;
  SellmeierModel sellmeier_;
  double omega_c_;
  ProbeIndices indices_;
};

}  // namespace eosvac
