#include "eosvac/dispersion.hpp"

#include <cmath>
#include <string>

#include "eosvac/errors.hpp"
#include "eosvac/units.hpp"

namespace eosvac {

void SellmeierModel::validate() const {
  if (!(A > 0.0)) throw DomainError("Sellmeier A must be > 0");
  if (!(B >= 0.0)) throw DomainError("Sellmeier B must be >= 0");
  if (!(c2_um2 >= 0.0)) throw DomainError("Sellmeier c2 must be >= 0");
}

void PhononModel::validate() const {
  if (!(omega_to > 0.0)) throw DomainError("omega_TO must be > 0");
  if (!(omega_lo > omega_to)) throw DomainError("omega_LO must exceed omega_TO");
  if (!(gamma > 0.0)) throw DomainError("phonon damping gamma must be > 0");
  if (!(eps_inf > 1.0)) throw DomainError("eps_inf must be > 1");
}

Material znte() {
  Material m;
  m.name = "ZnTe";
  m.sellmeier = SellmeierModel{4.27, 3.01, 0.142};
  m.phonon = PhononModel{units::wavenumber_cm_to_angular(177.0),
                         units::wavenumber_cm_to_angular(206.0),
                         units::wavenumber_cm_to_angular(3.01), 6.7};
  return m;
}

Material material_by_name(std::string_view name) {
  if (name == "ZnTe" || name == "znte") return znte();
  throw DomainError("unknown material '" + std::string(name) + "'");
}

double wavelength_um(double omega) { return units::two_pi * units::c0 / omega * 1e6; }

namespace {

struct SellmeierTerms {
  double lam2;
  double denom;  // lambda^2 - c2
  double n;
};

SellmeierTerms sellmeier_terms(const SellmeierModel& model, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("Sellmeier evaluation needs a finite omega > 0");
  }
  const double lam = wavelength_um(omega);
  const double lam2 = lam * lam;
  const double denom = lam2 - model.c2_um2;
  if (!(denom > 0.0)) {
    throw DomainError("Sellmeier pole: lambda^2 <= c2 at lambda = " + std::to_string(lam) +
                      " um");
  }
  const double n2 = model.A + model.B * lam2 / denom;
  return {lam2, denom, std::sqrt(n2)};
}

}  // namespace

double n_nir(const SellmeierModel& model, double omega) {
  return sellmeier_terms(model, omega).n;
}

double group_index(const SellmeierModel& model, double omega) {
  // n_g = n - lambda dn/dlambda, and d(n^2)/dlambda = -2 B lambda c2 / (lambda^2 - c2)^2.
  const auto t = sellmeier_terms(model, omega);
  return t.n + model.B * t.lam2 * model.c2_um2 / (t.n * t.denom * t.denom);
}

std::complex<double> n_thz_complex(const PhononModel& model, double Omega) {
  const double to2 = model.omega_to * model.omega_to;
  const double lo2 = model.omega_lo * model.omega_lo;
  const std::complex<double> denom(to2 - Omega * Omega, -model.gamma * Omega);
  const std::complex<double> eps = model.eps_inf * (1.0 + (lo2 - to2) / denom);
  // std::sqrt has its branch cut on the negative real axis, so Re >= 0 and
  // sign(Im) = sign(Im eps) >= 0 for Omega >= 0.
  return std::sqrt(eps);
}

double n_thz(const PhononModel& model, double Omega) { return n_thz_complex(model, Omega).real(); }

ProbeIndices probe_indices(const SellmeierModel& model, double omega_c) {
  return {n_nir(model, omega_c), group_index(model, omega_c)};
}

CrystalGeometry::CrystalGeometry(double length, double r41, double waist,
                                 const SellmeierModel& model, double omega_c)
    : length_(length), r41_(r41), waist_(waist), sellmeier_(model), omega_c_(omega_c) {
  if (!(length > 0.0)) throw DomainError("crystal length must be > 0");
  if (!(waist > 0.0)) throw DomainError("probe waist must be > 0");
  if (!std::isfinite(r41)) throw DomainError("r41 must be finite");
  indices_ = probe_indices(sellmeier_, omega_c_);
}

double CrystalGeometry::coupling_d() const {
  const double n2 = indices_.n * indices_.n;
  return -n2 * n2 * r41_;
}

CrystalGeometry CrystalGeometry::with_length(double length) const {
  return CrystalGeometry(length, r41_, waist_, sellmeier_, omega_c_);
}

CrystalGeometry CrystalGeometry::with_r41(double r41) const {
  return CrystalGeometry(length_, r41, waist_, sellmeier_, omega_c_);
}

CrystalGeometry CrystalGeometry::with_waist(double waist) const {
  return CrystalGeometry(length_, r41_, waist, sellmeier_, omega_c_);
}

CrystalGeometry CrystalGeometry::at_center(double omega_c) const {
  return CrystalGeometry(length_, r41_, waist_, sellmeier_, omega_c);
}

}  // namespace eosvac
