// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "eosvac/dispersion.hpp"
#include "eosvac/errors.hpp"
#include "eosvac/modes.hpp"
#include "eosvac/probe.hpp"
#include "eosvac/response.hpp"
#include "eosvac/squeeze.hpp"
#include "eosvac/stats.hpp"
#include "eosvac/units.hpp"

using namespace eosvac;
using units::thz_to_angular;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const std::function<Verdict()>& check) {
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.ok) ++failures;
  std::printf("%s %s  %s\n", id, v.ok ? "PASS" : "FAIL", v.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Preset {
  Material mat = znte();
  ProbeSpec probe = rectangular_probe(255.0, 150.0, 1e10);
  DetectorEfficiency eta = DetectorEfficiency::standard();
  FrequencyGrid grid = FrequencyGrid::standard();
  CrystalGeometry geo{7e-6, 4e-12, 3e-6, znte().sellmeier, thz_to_angular(255.0)};

  ResponseTable table(bool cutoff, const CrystalGeometry& g) const {
    return build_response(probe, eta, g, mat.phonon, grid, cutoff);
  }
  ResponseTable table(bool cutoff) const { return table(cutoff, geo); }
};

numint::QuadratureSpec simpson_spec() {
  numint::QuadratureSpec s;
  s.method = numint::Method::FixedGridSimpson;
  s.rel_tol = 1e-8;
  return s;
}

numint::QuadratureSpec adaptive_spec() {
  numint::QuadratureSpec s;
  s.rel_tol = 1e-10;
  return s;
}

}  // namespace

int main() {
  const Preset P;

  report("AC1", [&] {
    const double n = P.geo.n();
    const double ng = P.geo.n_g();
    const bool ok = std::abs(n - 2.76) <= 0.01 && std::abs(ng - 2.90) <= 0.02;
    return Verdict{ok, fmt("n=%.6f (2.76+-0.01) n_g=%.6f (2.90+-0.02)", n, ng)};
  });

  report("AC2", [&] {
    const double cut = diffraction_cutoff(P.mat.phonon, P.geo.waist(), P.probe.delta_omega);
    double lo = 1e9;
    double hi = -1e9;
    const int steps = 20000;
    for (int i = 0; i <= steps; ++i) {
      const double W = cut + (thz_to_angular(150.0) - cut) * i / steps;
      const double v = n_thz(P.mat.phonon, W);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const bool ok = lo >= 2.54 && hi <= 2.60;
    return Verdict{ok, fmt("n_Omega in [%.4f, %.4f] over %.3f-150 THz (window [2.54, 2.60])", lo, hi,
                           units::angular_to_thz(cut))};
  });

  report("AC3", [&] {
    const double wp = avg_detected_frequency(P.probe, P.eta);
    const double closed = thz_to_angular(150.0) / std::log(330.0 / 180.0);
    const double f = units::angular_to_thz(wp);
    const double r = rel(wp, closed);
    const bool ok = std::abs(f - 247.0) <= 1.0 && r <= 1e-9;
    return Verdict{ok, fmt("omega_p/2pi=%.4f THz (247+-1) closed-form rel diff=%.2e (<=1e-9)", f, r)};
  });

  report("AC4", [&] {
    const auto on = P.table(true);
    const auto off = P.table(false);
    const double n = P.geo.n();
    const double ratio = variance_integral(off, P.mat.phonon, n, adaptive_spec()).value /
                         variance_integral(on, P.mat.phonon, n, adaptive_spec()).value;
    return Verdict{std::abs(ratio - 1.21) <= 0.02, fmt("no-cutoff/cutoff=%.5f (1.21+-0.02)", ratio)};
  });

  const auto rt = P.table(true);
  const auto sq = squeeze::default_band();
  const auto coeff = squeeze::squeeze_coefficients(rt, P.mat.phonon, sq);

  report("AC5", [&] {
    // Scan the delay explicitly at 0.05 fs over two periods for both phases.
    const double T = squeeze::sv_period(sq);
    double lo = 1e9;
    double hi = -1e9;
    for (double theta : {0.0, std::numbers::pi}) {
      auto s = sq;
      s.theta = theta;
      for (double tau = -T; tau <= T; tau += 0.05e-15) {
        const double v = squeeze::sv_variance_ratio(coeff, s, tau);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const bool ok = std::abs(lo - 0.36) <= 0.02 && hi > 2.0;
    return Verdict{ok, fmt("min=%.5f (0.36+-0.02) max=%.4f (>2) a=%.6f b=%.6f M=%.3f", lo, hi,
                           coeff.a, coeff.b, sq.M())};
  });

  report("AC6", [&] {
    const auto opt = squeeze::optimal_squeeze(coeff, 0.0, 100.0);
    const bool ok = opt.kind == squeeze::OptimumKind::Interior &&
                    std::abs(opt.M_opt - 5.8) <= 0.2 && std::abs(opt.ratio - 0.34) <= 0.01;
    return Verdict{ok, fmt("M_opt=%.5f (5.8+-0.2) floor=%.5f (0.34+-0.01)", opt.M_opt, opt.ratio)};
  });

  report("AC7", [&] {
    const modes::ModeGeometry g{P.geo.waist(), 0.0};
    double gram = 0.0;
    for (int la = -2; la <= 2; ++la)
      for (int pa = 0; pa <= 1; ++pa)
        for (int lb = -2; lb <= 2; ++lb)
          for (int pb = 0; pb <= 1; ++pb) {
            const double want = (la == lb && pa == pb) ? 1.0 : 0.0;
            gram = std::max(gram, std::abs(modes::mode_norm({la, pa}, {lb, pb}, g) - want));
          }
    const double w0 = P.geo.waist();
    const double expect = 1.0 / (std::sqrt(std::numbers::pi) * w0);
    const double r00 = std::abs(modes::pump_probe_overlap_numeric({0, 0}, w0) - expect) / expect;
    double other = 0.0;
    for (int l = -2; l <= 2; ++l)
      for (int p = 0; p <= 1; ++p) {
        if (l == 0 && p == 0) continue;
        // Dimensionless overlap, in units of 1/w0.
        other = std::max(other, std::abs(modes::pump_probe_overlap_numeric({l, p}, w0)) * w0);
      }
    const bool ok = gram <= 1e-8 && r00 <= 1e-8 && other <= 1e-10;
    return Verdict{ok, fmt("gram max dev=%.2e (<=1e-8) overlap00 rel=%.2e (<=1e-8) others=%.2e "
                           "(<=1e-10)",
                           gram, r00, other)};
  });

  report("AC8", [&] {
    const auto at = [&](double N, const CrystalGeometry& g, const ResponseTable& t) {
      return eos_variance_pv(rectangular_probe(255.0, 150.0, N), P.eta, g, t, P.mat.phonon);
    };
    const auto base = at(1e10, P.geo, rt);
    double worst = 0.0;
    worst = std::max(worst, rel(at(4e10, P.geo, rt).var_eo, 16.0 * base.var_eo));
    worst = std::max(worst, rel(at(1e10, P.geo.with_r41(3.0 * P.geo.r41()), rt).var_eo,
                                9.0 * base.var_eo));
    worst = std::max(worst, rel(at(1e10, P.geo.with_length(2.0 * P.geo.length()), rt).var_eo,
                                4.0 * base.var_eo));
    const auto open = P.table(false);
    const auto wide = P.geo.with_waist(3.0 * P.geo.waist());
    const auto open_wide = P.table(false, wide);
    worst = std::max(worst, rel(at(1e10, wide, open_wide).var_eo,
                                at(1e10, P.geo, open).var_eo / 9.0));
    const bool sn = at(1e10, P.geo, rt).var_sn == 1e10 && at(3.7e7, P.geo, rt).var_sn == 3.7e7;
    const bool ok = worst <= 1e-12 && sn;
    return Verdict{ok, fmt("max rel dev over N^2, r41^2, l^2, 1/w0^2 = %.2e (<=1e-12) var_sn==N: %s",
                           worst, sn ? "yes" : "no")};
  });

  report("AC9", [&] {
    const double n = P.geo.n();
    const double ia = variance_integral(rt, P.mat.phonon, n, adaptive_spec()).value;
    const double is = variance_integral(rt, P.mat.phonon, n, simpson_spec()).value;
    const auto ca = squeeze::squeeze_coefficients(rt, P.mat.phonon, sq, adaptive_spec());
    const auto cs = squeeze::squeeze_coefficients(rt, P.mat.phonon, sq, simpson_spec());
    const double dev = std::max({rel(is, ia), rel(cs.I, ca.I), rel(cs.Ia, ca.Ia), rel(cs.Ib, ca.Ib)});

    // b >= 0 presumes varrho keeps one sign over the band; bands where the
    // phase-matching sinc crosses zero are counted separately and must still
    // obey |b| <= a <= 1.
    std::mt19937_64 rng(20180101);
    std::uniform_real_distribution<double> center(15.0, 120.0);
    std::uniform_real_distribution<double> frac(0.05, 1.5);
    std::uniform_real_distribution<double> len(1.0, 30.0);
    std::uniform_real_distribution<double> waist(1.0, 10.0);
    int definite = 0;
    int mixed = 0;
    int violations = 0;
    for (int i = 0; i < 1000 && definite < 100; ++i) {
      const double c_thz = center(rng);
      const double w_thz = std::min(frac(rng) * c_thz, 1.9 * c_thz);
      const CrystalGeometry g(len(rng) * 1e-6, 4e-12, waist(rng) * 1e-6, P.mat.sellmeier,
                              thz_to_angular(255.0));
      const auto t = P.table((i % 2) == 0, g);
      const auto band = squeeze::band_spec(c_thz, w_thz, 2.0, 0.0);
      squeeze::SqueezeCoefficients c;
      try {
        c = squeeze::squeeze_coefficients(t, P.mat.phonon, band);
      } catch (const DomainError&) {
        continue;
      }
      bool pos = false;
      bool neg = false;
      for (int k = 0; k <= 2000; ++k) {
        const double W = band.omega1 + (band.omega2 - band.omega1) * k / 2000.0;
        const double v = squeeze::varrho(t, P.mat.phonon, W);
        pos = pos || v > 0.0;
        neg = neg || v < 0.0;
      }
      const bool bound = std::abs(c.b) <= c.a + 1e-12 && c.a <= 1.0 + 1e-12 && c.a >= 0.0;
      if (pos && neg) {
        ++mixed;
        if (!bound) ++violations;
        continue;
      }
      ++definite;
      if (!(bound && c.b >= -1e-12)) ++violations;
    }
    const bool ok = dev <= 1e-6 && definite == 100 && violations == 0;
    return Verdict{ok, fmt("Simpson vs adaptive max rel dev=%.2e (<=1e-6); 0<=b<=a<=1 in %d/100 "
                           "sign-definite cases, |b|<=a in %d sign-changing cases, violations=%d",
                           dev, definite, mixed, violations)};
  });

  const auto st = eos_variance_pv(P.probe, P.eta, P.geo, rt, P.mat.phonon);

  report("AC10", [&] {
    const double Nstar = *crossover_photon_number(st);
    const double excess = stats_at(st.kappa, Nstar).ratio_excess;
    const double d0 = std::abs(excess - (std::sqrt(2.0) - 1.0));
    double low = 0.0;
    for (double f : {1e-6, 1e-4, 1e-2}) {
      const double N = f * Nstar;
      low = std::max(low, rel(stats_at(st.kappa, N).rms_total, std::sqrt(N)));
    }
    double high = 0.0;
    for (double f : {1e2, 1e4, 1e6}) {
      const double N = f * Nstar;
      high = std::max(high, rel(stats_at(st.kappa, N).rms_total, st.kappa * N));
    }
    const bool ok = d0 <= 1e-9 && low <= 0.01 && high <= 0.01;
    return Verdict{ok, fmt("N*=%.4e excess-(sqrt2-1)=%.1e (<=1e-9) low-N dev=%.4f high-N dev=%.4f "
                           "(<=0.01)",
                           Nstar, d0, low, high)};
  });

  report("AC11", [&] {
    const double wp = avg_detected_frequency(P.probe, P.eta);
    const auto f = effective_vacuum_field(rt, P.mat.phonon, P.geo, wp);
    // Frozen from two independent evaluations (adaptive here; QUADPACK in the
    // reference script), agreeing to 1e-10.
    const double frozen = 1178.0821482133408;
    const double r = rel(f.e_rms, frozen);
    const bool ok = f.e_rms >= 1e2 && f.e_rms <= 1e4 && r <= 1e-8;
    return Verdict{ok, fmt("e_rms=%.6f V/m (1e2..1e4) frozen %.6f rel dev=%.2e (<=1e-8)", f.e_rms,
                           frozen, r)};
  });

  report("AC12", [&] {
    const std::size_t n = 1000000;
    const std::uint64_t seed = 20180101;
    const auto a = synth_traces(st, n, seed);
    const auto b = synth_traces(st, n, seed);
    const bool same = a.size() == b.size() &&
                      std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
    const double mean = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double x : a) ss += (x - mean) * (x - mean);
    const double var = ss / static_cast<double>(n - 1);
    const double want = st.var_eo + st.var_sn;
    const double vdev = std::abs(var / want - 1.0);
    const double vtol = 3.0 * std::sqrt(2.0 / static_cast<double>(n));
    const double se = std::sqrt(want / static_cast<double>(n));
    const bool ok = vdev <= vtol && std::abs(mean) <= 4.0 * se && same;
    return Verdict{ok, fmt("var rel dev=%.2e (<=%.2e) |mean|/SE=%.2f (<=4) bit-identical: %s", vdev,
                           vtol, std::abs(mean) / se, same ? "yes" : "no")};
  });

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
