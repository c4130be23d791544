#include "eosvac/response.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eosvac/errors.hpp"
#include "eosvac/units.hpp"

namespace eosvac {

FrequencyGrid FrequencyGrid::uniform(double omega_max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("grid step must be > 0");
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw DomainError("grid max must be > 0");
  const auto panels = static_cast<std::size_t>(std::ceil(omega_max / step - 1e-9));
  return FrequencyGrid(step, panels + 1);
}

FrequencyGrid FrequencyGrid::standard() {
  return uniform(units::thz_to_angular(160.0), units::thz_to_angular(0.05));
}

std::vector<double> FrequencyGrid::points() const {
  std::vector<double> pts(count_);
  for (std::size_t i = 0; i < count_; ++i) pts[i] = at(i);
  return pts;
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double phase_matching_sinc(const CrystalGeometry& geo, const PhononModel& phonon, double Omega) {
  const double arg = geo.length() * Omega * (n_thz(phonon, Omega) - geo.n_g()) / (2.0 * units::c0);
  return sinc(arg);
}

double diffraction_cutoff(const PhononModel& phonon, double waist, double search_max) {
  if (!(waist > 0.0)) throw DomainError("waist must be > 0");
  // lambda / (2 n) - w0 with lambda = 2 pi c0 / Omega.
  const auto excess = [&](double W) { return units::pi * units::c0 / (n_thz(phonon, W) * W) - waist; };
  double hi = search_max;
  for (int i = 0; i < 200 && excess(hi) >= 0.0; ++i) hi *= 2.0;
  if (excess(hi) >= 0.0) throw RootFindingError("diffraction cutoff: no upper bracket found");
  double lo = hi;
  while (true) {
    const double next = lo * 0.97;
    if (next < 1e-6 * search_max) throw RootFindingError("diffraction cutoff: no lower bracket found");
    if (excess(next) >= 0.0) {
      lo = next;
      break;
    }
    hi = next;
    lo = next;
  }
  return numint::find_root(excess, lo, hi, 1e-14 * hi);
}

ResponseModel::ResponseModel(ProbeSpec probe, DetectorEfficiency eta, CrystalGeometry geo,
                             PhononModel phonon, const FrequencyGrid& grid, bool cutoff_enabled)
    : probe_(std::move(probe)),
      eta_(std::move(eta)),
      geo_(std::move(geo)),
      phonon_(phonon),
      cutoff_enabled_(cutoff_enabled) {
  probe_.validate();
  phonon_.validate();
  support_max_ = autocorrelation_support(probe_);
  if (grid.max() < support_max_ * (1.0 - 1e-12)) {
    throw DomainError("frequency grid ends below the autocorrelation support (" +
                      std::to_string(units::angular_to_thz(support_max_)) + " THz)");
  }
  if (cutoff_enabled_) cutoff_omega_ = diffraction_cutoff(phonon_, geo_.waist(), support_max_);

  const auto [lo, hi] = probe_.support();
  closed_form_f_ = probe_.shape == SpectralShape::Rectangular && eta_.unity_on(lo, hi);
  if (!closed_form_f_) {
    f_step_ = grid.spacing();
    f_samples_.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      f_samples_[i] = autocorrelation_f_numeric(probe_, eta_, grid.at(i));
    }
  }
}

double ResponseModel::f(double Omega) const {
  if (closed_form_f_) return autocorrelation_f(probe_, eta_, Omega);
  const double x = std::abs(Omega) / f_step_;
  const auto i = static_cast<std::size_t>(x);
  if (i + 1 >= f_samples_.size()) return i < f_samples_.size() ? f_samples_[i] : 0.0;
  const double t = x - static_cast<double>(i);
  return f_samples_[i] + t * (f_samples_[i + 1] - f_samples_[i]);
}

double ResponseModel::sinc_factor(double Omega) const {
  return phase_matching_sinc(geo_, phonon_, Omega);
}

double ResponseModel::operator()(double Omega) const {
  if (cutoff_enabled_ && Omega < cutoff_omega_) return 0.0;
  if (std::abs(Omega) >= support_max_) return 0.0;
  return sinc_factor(Omega) * f(Omega);
}

std::vector<double> ResponseModel::breakpoints() const {
  std::vector<double> b{support_max_, phonon_.omega_to, phonon_.omega_lo};
  if (cutoff_enabled_) b.push_back(cutoff_omega_);
  std::sort(b.begin(), b.end());
  return b;
}

ResponseTable build_response(const ProbeSpec& p, const DetectorEfficiency& eta,
                             const CrystalGeometry& geo, const PhononModel& phonon,
                             const FrequencyGrid& grid, bool cutoff_enabled) {
  ResponseTable rt{ResponseModel(p, eta, geo, phonon, grid, cutoff_enabled), grid, {}, {}, {}, 0.0,
                   cutoff_enabled};
  rt.cutoff_omega = rt.model.cutoff_omega();
  const std::size_t n = grid.size();
  rt.f.resize(n);
  rt.sinc.resize(n);
  rt.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double W = grid.at(i);
    rt.f[i] = rt.model.f(W);
    rt.sinc[i] = rt.model.sinc_factor(W);
    rt.values[i] = rt.model(W);
  }
  return rt;
}

std::vector<double> variance_integrand(const ResponseTable& rt, const PhononModel& phonon, double n) {
  std::vector<double> out(rt.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double W = rt.grid.at(i);
    const double R = rt.values[i];
    out[i] = R == 0.0 ? 0.0 : W * (n / n_thz(phonon, W)) * R * R;
  }
  return out;
}

numint::QuadratureResult variance_integral(const ResponseTable& rt, const PhononModel& phonon,
                                           double n, numint::QuadratureSpec spec) {
  if (spec.method == numint::Method::FixedGridSimpson && spec.grid_step == 0.0) {
    spec.grid_step = rt.grid.spacing();
  }
  const double lo = rt.cutoff_enabled ? rt.cutoff_omega : 0.0;
  const double hi = rt.model.support_max();
  if (!(hi > lo)) return {};
  const auto integrand = [&](double W) {
    const double R = rt.model(W);
    return R == 0.0 ? 0.0 : W * (n / n_thz(phonon, W)) * R * R;
  };
  const auto breaks = rt.model.breakpoints();
  return numint::integrate_1d(integrand, lo, hi, spec, breaks);
}

double variance_integral_tabulated(const ResponseTable& rt, const PhononModel& phonon, double n) {
  const auto y = variance_integrand(rt, phonon, n);
  return numint::simpson_samples(y, rt.grid.spacing());
}

}  // namespace eosvac
