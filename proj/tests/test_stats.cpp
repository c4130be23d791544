#include <doctest.h>

#include <cmath>
#include <numeric>

#include "eosvac/errors.hpp"
#include "eosvac/stats.hpp"
#include "eosvac/units.hpp"

using namespace eosvac;
using units::thz_to_angular;

namespace {

struct Preset {
  Material mat = znte();
  DetectorEfficiency eta = DetectorEfficiency::standard();
  FrequencyGrid grid = FrequencyGrid::standard();
  CrystalGeometry geo{7e-6, 4e-12, 3e-6, znte().sellmeier, thz_to_angular(255.0)};

  ResponseTable table(const CrystalGeometry& g, bool cutoff) const {
    return build_response(rectangular_probe(255.0, 150.0, 1.0), eta, g, mat.phonon, grid, cutoff);
  }
  SignalStats at(double N, const CrystalGeometry& g, const ResponseTable& rt) const {
    return eos_variance_pv(rectangular_probe(255.0, 150.0, N), eta, g, rt, mat.phonon);
  }
};

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("frozen preset values") {
  Preset s;
  const auto rt = s.table(s.geo, true);
  const auto st = s.at(1e10, s.geo, rt);
  CHECK(st.kappa == doctest::Approx(3.6019997418487522e-6).epsilon(1e-8));
  CHECK(st.var_sn == 1e10);
  const auto field = effective_vacuum_field(rt, s.mat.phonon, s.geo,
                                            avg_detected_frequency_closed_form(
                                                rectangular_probe(255.0, 150.0, 1.0)));
  CHECK(field.e_rms == doctest::Approx(1178.0821482133408).epsilon(1e-8));
  CHECK(field.e_rms * field.sampling_gain == doctest::Approx(st.kappa).epsilon(1e-12));
  CHECK(*crossover_photon_number(st) == doctest::Approx(7.7074842e10).epsilon(1e-7));
}

TEST_CASE("variance scaling laws") {
  Preset s;
  const auto rt = s.table(s.geo, true);
  const auto base = s.at(1e9, s.geo, rt);

  SUBCASE("photon number") {
    const auto st = s.at(3e9, s.geo, rt);
    CHECK(rel_close(st.var_eo, 9.0 * base.var_eo, 1e-12));
    CHECK(st.var_sn == 3e9);
  }
  SUBCASE("electro-optic coefficient") {
    const auto g = s.geo.with_r41(2.5 * s.geo.r41());
    CHECK(rel_close(s.at(1e9, g, rt).var_eo, 6.25 * base.var_eo, 1e-12));
  }
  SUBCASE("crystal length at fixed response") {
    const auto g = s.geo.with_length(1.7 * s.geo.length());
    CHECK(rel_close(s.at(1e9, g, rt).var_eo, 1.7 * 1.7 * base.var_eo, 1e-12));
  }
  SUBCASE("waist with the cutoff disabled") {
    const auto open = s.table(s.geo, false);
    const auto g = s.geo.with_waist(2.0 * s.geo.waist());
    const auto open_g = s.table(g, false);
    const double v1 = s.at(1e9, s.geo, open).var_eo;
    const double v2 = s.at(1e9, g, open_g).var_eo;
    CHECK(rel_close(v2, 0.25 * v1, 1e-12));
  }
  SUBCASE("vanishing coupling") {
    const auto st = s.at(1e9, s.geo.with_r41(0.0), rt);
    CHECK(st.var_eo == 0.0);
    CHECK_FALSE(crossover_photon_number(st).has_value());
  }
}

TEST_CASE("crossover shape") {
  const double kappa = 3.6e-6;
  const double Nstar = 1.0 / (kappa * kappa);
  CHECK(std::abs(stats_at(kappa, Nstar).ratio_excess - (std::sqrt(2.0) - 1.0)) <= 1e-9);
  for (double f : {1e-6, 1e-3, 1e-2}) {
    const double N = f * Nstar;
    CHECK(rel_close(stats_at(kappa, N).rms_total, std::sqrt(N), 0.01));
  }
  for (double f : {100.0, 1e3, 1e6}) {
    const double N = f * Nstar;
    CHECK(rel_close(stats_at(kappa, N).rms_total, kappa * N, 0.01));
  }
  CHECK_THROWS_AS(stats_at(kappa, 0.0), DomainError);
}

TEST_CASE("photon sweep") {
  const auto Ns = log_space(1e4, 1e16, 121);
  REQUIRE(Ns.size() == 121);
  CHECK(Ns.front() == 1e4);
  CHECK(Ns.back() == doctest::Approx(1e16).epsilon(1e-15));
  CHECK(Ns[10] == doctest::Approx(1e5).epsilon(1e-13));
  const auto rows = sweep_photon_number(stats_at(3.6e-6, 1.0), Ns);
  REQUIRE(rows.size() == Ns.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].ratio_excess > rows[i - 1].ratio_excess);
    CHECK(rows[i].sn_over_n < rows[i - 1].sn_over_n);
  }
}

TEST_CASE("synthetic traces") {
  const auto st = stats_at(3.6e-6, 1e10);
  const std::size_t n = 200000;
  const auto a = synth_traces(st, n, 7);
  const auto b = synth_traces(st, n, 7);
  CHECK(a == b);
  CHECK(synth_traces(st, n, 8) != a);

  const double mean = std::accumulate(a.begin(), a.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : a) ss += (x - mean) * (x - mean);
  const double var = ss / (n - 1);
  const double want = st.var_eo + st.var_sn;
  CHECK(std::abs(var / want - 1.0) <= 3.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(mean) <= 4.0 * std::sqrt(want / n));

  SignalStats zero;
  const auto z = synth_traces(zero, 5, 1);
  CHECK(z == std::vector<double>(5, 0.0));
  CHECK_THROWS_AS(synth_traces(st, 0, 1), DomainError);
}
