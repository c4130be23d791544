#include "eosvac/probe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "eosvac/errors.hpp"
#include "eosvac/numint.hpp"
#include "eosvac/units.hpp"

namespace eosvac {

namespace {

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (xs.empty() || x < xs.front() || x > xs.back()) return 0.0;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  const auto i = static_cast<std::size_t>(it - xs.begin());
  if (i == 0) return ys.front();
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

numint::QuadratureSpec tight_spec() {
  numint::QuadratureSpec q;
  q.method = numint::Method::AdaptiveSubdivision;
  q.rel_tol = 1e-13;
  q.max_depth = 50;
  return q;
}

}  // namespace

void TabulatedSpectrum::validate() const {
  if (omega.size() != amplitude.size()) throw DomainError("spectrum columns differ in length");
  if (omega.size() < 2) throw DomainError("spectrum needs at least two samples");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0)) throw DomainError("spectrum frequencies must be > 0");
    if (i > 0 && !(omega[i] > omega[i - 1])) {
      throw DomainError("spectrum frequencies must be strictly increasing");
    }
    if (!(amplitude[i] >= 0.0)) throw DomainError("spectrum amplitudes must be >= 0");
  }
}

double TabulatedSpectrum::operator()(double w) const { return interpolate(omega, amplitude, w); }

TabulatedSpectrum parse_spectrum_csv(std::istream& in) {
  TabulatedSpectrum s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double f_thz = 0.0;
    double amp = 0.0;
    if (!(row >> f_thz >> amp)) {
      if (s.omega.empty()) continue;  // header
      throw DomainError("spectrum CSV: malformed row " + std::to_string(lineno));
    }
    s.omega.push_back(units::thz_to_angular(f_thz));
    s.amplitude.push_back(amp);
  }
  s.validate();
  return s;
}

void ProbeSpec::validate() const {
  if (shape == SpectralShape::Rectangular) {
    if (!(delta_omega > 0.0)) throw DomainError("probe bandwidth must be > 0");
    if (!(omega_c - 0.5 * delta_omega > 0.0)) {
      throw DomainError("probe spectrum extends to non-positive frequencies");
    }
  } else {
    if (!spectrum) throw DomainError("tabulated probe requires a spectrum table");
    spectrum->validate();
  }
  if (!(omega_c > 0.0)) throw DomainError("probe center frequency must be > 0");
  if (!(photons_N > 0.0)) throw DomainError("probe photon number must be > 0");
  if (!std::isfinite(delay_tau)) throw DomainError("probe delay must be finite");
}

double ProbeSpec::amplitude(double omega) const {
  if (shape == SpectralShape::Tabulated) return (*spectrum)(omega);
  const double half = 0.5 * delta_omega;
  return (omega >= omega_c - half && omega <= omega_c + half) ? 1.0 : 0.0;
}

std::pair<double, double> ProbeSpec::support() const {
  if (shape == SpectralShape::Tabulated) return {spectrum->omega.front(), spectrum->omega.back()};
  return {omega_c - 0.5 * delta_omega, omega_c + 0.5 * delta_omega};
}

std::vector<double> ProbeSpec::kinks() const {
  if (shape == SpectralShape::Tabulated) return spectrum->omega;
  const auto [lo, hi] = support();
  return {lo, hi};
}

ProbeSpec rectangular_probe(double center_thz, double bandwidth_thz, double photons_N,
                            double delay_fs) {
  ProbeSpec p;
  p.omega_c = units::thz_to_angular(center_thz);
  p.delta_omega = units::thz_to_angular(bandwidth_thz);
  p.shape = SpectralShape::Rectangular;
  p.photons_N = photons_N;
  p.delay_tau = units::fs_to_s(delay_fs);
  p.validate();
  return p;
}

DetectorEfficiency DetectorEfficiency::step(double threshold_omega) {
  if (!(threshold_omega >= 0.0)) throw DomainError("detector threshold must be >= 0");
  DetectorEfficiency d;
  d.threshold_ = threshold_omega;
  return d;
}

DetectorEfficiency DetectorEfficiency::standard() { return step(units::thz_to_angular(30.0)); }

DetectorEfficiency DetectorEfficiency::tabulated(std::vector<double> omega, std::vector<double> eta) {
  if (omega.size() != eta.size() || omega.size() < 2) {
    throw DomainError("detector table needs matching columns with >= 2 samples");
  }
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (i > 0 && !(omega[i] > omega[i - 1])) throw DomainError("detector table not increasing");
    if (!(eta[i] >= 0.0 && eta[i] <= 1.0)) throw DomainError("detector efficiency outside [0,1]");
  }
  DetectorEfficiency d;
  d.threshold_ = omega.front();
  d.table_omega_ = std::move(omega);
  d.table_eta_ = std::move(eta);
  return d;
}

double DetectorEfficiency::operator()(double omega) const {
  if (!table_omega_.empty()) return interpolate(table_omega_, table_eta_, omega);
  return omega >= threshold_ && omega > 0.0 ? 1.0 : 0.0;
}

bool DetectorEfficiency::unity_on(double lo, double hi) const {
  if (table_omega_.empty()) return lo >= threshold_ && lo > 0.0;
  // Piecewise linear: unity at both ends and at every interior node suffices.
  if ((*this)(lo) != 1.0 || (*this)(hi) != 1.0) return false;
  for (std::size_t i = 0; i < table_omega_.size(); ++i) {
    if (table_omega_[i] > lo && table_omega_[i] < hi && table_eta_[i] != 1.0) return false;
  }
  return true;
}

std::vector<double> DetectorEfficiency::kinks() const {
  if (!table_omega_.empty()) return table_omega_;
  return {threshold_};
}

double avg_detected_frequency(const ProbeSpec& p, const DetectorEfficiency& eta) {
  const auto [lo, hi] = p.support();
  std::vector<double> breaks = p.kinks();
  for (double k : eta.kinks()) breaks.push_back(k);
  const auto spec = tight_spec();
  const auto power = [&](double w) {
    const double a = p.amplitude(w);
    return eta(w) * a * a;
  };
  const double num = numint::integrate_1d(power, lo, hi, spec, breaks).value;
  const double den =
      numint::integrate_1d([&](double w) { return power(w) / w; }, lo, hi, spec, breaks).value;
  if (!(num > 0.0) || !(den > 0.0)) {
    throw DomainError("degenerate probe spectrum: no detected power");
  }
  return num / den;
}

double avg_detected_frequency_closed_form(const ProbeSpec& p) {
  if (p.shape != SpectralShape::Rectangular) {
    throw DomainError("closed-form omega_p only applies to the rectangular spectrum");
  }
  const auto [lo, hi] = p.support();
  return p.delta_omega / std::log(hi / lo);
}

double autocorrelation_support(const ProbeSpec& p) {
  const auto [lo, hi] = p.support();
  return hi - lo;
}

double autocorrelation_f(const ProbeSpec& p, const DetectorEfficiency& eta, double Omega) {
  const auto [lo, hi] = p.support();
  if (p.shape == SpectralShape::Rectangular && eta.unity_on(lo, hi)) {
    const double x = std::abs(Omega) / p.delta_omega;
    return x < 1.0 ? 1.0 - x : 0.0;
  }
  return autocorrelation_f_numeric(p, eta, Omega);
}

double autocorrelation_f_numeric(const ProbeSpec& p, const DetectorEfficiency& eta, double Omega) {
  const auto [lo, hi] = p.support();
  if (std::abs(Omega) >= hi - lo) return 0.0;
  std::vector<double> breaks;
  for (double k : p.kinks()) {
    breaks.push_back(k);
    breaks.push_back(k - Omega);
    breaks.push_back(k + Omega);
  }
  for (double k : eta.kinks()) breaks.push_back(k);
  const auto spec = tight_spec();

  const double norm = numint::integrate_1d(
                          [&](double w) {
                            const double a = p.amplitude(w);
                            return eta(w) * a * a;
                          },
                          lo, hi, spec, breaks)
                          .value;
  if (!(norm > 0.0)) throw DomainError("degenerate probe spectrum: no detected power");

  // Flat phase: alpha is real, so f+^* = f+.
  const auto shifted = [&](double shift) {
    return numint::integrate_1d(
               [&](double w) { return eta(w) * p.amplitude(w) * p.amplitude(w + shift); }, lo, hi,
               spec, breaks)
        .value;
  };
  return 0.5 * (shifted(Omega) + shifted(-Omega)) / norm;
}

std::vector<TemporalSample> probe_temporal_profile(const ProbeSpec& p,
                                                  std::span<const double> times) {
  p.validate();
  const auto field = [&](double t) -> std::pair<double, double> {
    if (p.shape == SpectralShape::Rectangular) {
      const double x = 0.5 * p.delta_omega * t;
      const double env = std::abs(x) < 1e-8 ? 1.0 : std::sin(x) / x;
      return {env * std::cos(p.omega_c * t), -env * std::sin(p.omega_c * t)};
    }
    const auto [lo, hi] = p.support();
    numint::QuadratureSpec q;
    q.rel_tol = 1e-10;
    const auto re = numint::integrate_1d(
        [&](double w) { return p.amplitude(w) * std::cos(w * t); }, lo, hi, q, p.kinks());
    const auto im = numint::integrate_1d(
        [&](double w) { return -p.amplitude(w) * std::sin(w * t); }, lo, hi, q, p.kinks());
    return {re.value, im.value};
  };
  const auto [re0, im0] = field(0.0);
  const double peak = re0 * re0 + im0 * im0;
  std::vector<TemporalSample> out;
  out.reserve(times.size());
  for (double t : times) {
    const auto [re, im] = field(t);
    out.push_back({t, re * re / peak, (re * re + im * im) / peak});
  }
  return out;
}

}  // namespace eosvac
