#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "eosvac/errors.hpp"
#include "eosvac/modes.hpp"
#include "eosvac/units.hpp"

using namespace eosvac;
using namespace eosvac::modes;

TEST_CASE("associated Laguerre polynomials") {
  for (double x : {0.0, 0.3, 1.7, 5.0}) {
    CHECK(assoc_laguerre(0, 2.0, x) == 1.0);
    CHECK(assoc_laguerre(1, 1.0, x) == doctest::Approx(2.0 - x).epsilon(1e-15));
    CHECK(assoc_laguerre(1, 0.0, x) == doctest::Approx(1.0 - x).epsilon(1e-15));
    CHECK(assoc_laguerre(2, 0.0, x) ==
          doctest::Approx(0.5 * (x * x - 4.0 * x + 2.0)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(assoc_laguerre(-1, 0.0, 1.0), DomainError);
}

TEST_CASE("LG modes are orthonormal at the waist and after propagation") {
  const ModeGeometry geo{3e-6, 2.0 * std::numbers::pi * 2.58 / 7.5e-6};
  const double zr = 0.5 * geo.k * geo.waist * geo.waist;
  for (double z : {0.0, 0.7 * zr}) {
    double worst = 0.0;
    for (int la = -2; la <= 2; ++la)
      for (int pa = 0; pa <= 1; ++pa)
        for (int lb = -2; lb <= 2; ++lb)
          for (int pb = 0; pb <= 1; ++pb) {
            const auto g = mode_norm({la, pa}, {lb, pb}, geo, z);
            const double want = (la == lb && pa == pb) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g - want));
          }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("waist mode equals the propagated mode at z = 0") {
  const ModeGeometry geo{2e-6, 1e6};
  for (int l = -2; l <= 2; ++l) {
    const auto a = lg_mode({l, 1}, geo, 1.3e-6, 0.4, 0.0);
    const auto b = waist_mode({l, 1}, geo.waist, 1.3e-6, 0.4);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
  }
}

TEST_CASE("pump-probe overlap") {
  const double w0 = 3e-6;
  const double expect = 1.0 / (std::sqrt(std::numbers::pi) * w0);
  CHECK(pump_probe_overlap({0, 0}, w0) == doctest::Approx(expect).epsilon(1e-15));
  const auto num = pump_probe_overlap_numeric({0, 0}, w0);
  CHECK(std::abs(num - expect) <= 1e-8 * expect);
  for (int l = -2; l <= 2; ++l)
    for (int p = 0; p <= 1; ++p) {
      if (l == 0 && p == 0) continue;
      CHECK(pump_probe_overlap({l, p}, w0) == 0.0);
      // Relative to the (0,0) scale; the absolute floor applies to the
      // dimensionless overlap w0 * <..>.
      CHECK(std::abs(pump_probe_overlap_numeric({l, p}, w0)) * w0 <= 1e-10);
    }
  CHECK_THROWS_AS(pump_probe_overlap({0, -1}, w0), DomainError);
  CHECK_THROWS_AS(pump_probe_overlap({0, 0}, 0.0), DomainError);
}

TEST_CASE("paraxial validity ratio") {
  const CrystalGeometry geo(7e-6, 4e-12, 3e-6, znte().sellmeier, units::thz_to_angular(255.0));
  const auto ph = znte().phonon;
  CHECK(paraxial_validity(geo, ph, units::thz_to_angular(40.0)) == doctest::Approx(0.719).epsilon(2e-3));
  CHECK(paraxial_validity(geo, ph, 123027220503849.2) == doctest::Approx(1.485).epsilon(2e-3));
  CHECK_THROWS_AS(paraxial_validity(geo, ph, 0.0), DomainError);
}

TEST_CASE("fundamental mode values") {
  const double w0 = 3e-6;
  const ModeGeometry geo{w0, 1e6};
  const double peak = std::sqrt(2.0 / std::numbers::pi) / w0;
  CHECK(std::abs(lg_mode({0, 0}, geo, 0.0, 0.0, 0.0) - peak) <= 1e-12 * peak);
  CHECK(std::abs(lg_mode({0, 0}, geo, w0, 1.1, 0.0) - peak * std::exp(-1.0)) <= 1e-12 * peak);
  CHECK(std::abs(pump_probe_overlap({0, 0}, w0) - 188063.19) <= 1.0);
}

TEST_CASE("(1,1) mode against the explicit polynomial") {
  // L_1^1(x) = 2 - x, written out independently of the recurrence.
  const double w0 = 2.5e-6;
  const ModeGeometry geo{w0, 1e6};
  const double norm = std::sqrt(2.0 * 1.0 / (std::numbers::pi * 2.0)) / w0;  // sqrt(2 p!/(pi (p+|l|)!))
  for (double r : {0.3e-6, 1.7e-6, 4.0e-6}) {
    const double phi = 0.7;
    const double x = 2.0 * r * r / (w0 * w0);
    const std::complex<double> want =
        norm * (std::sqrt(2.0) * r / w0) * (2.0 - x) * std::exp(-r * r / (w0 * w0)) *
        std::exp(std::complex<double>(0.0, phi));
    const auto got = lg_mode({1, 1}, geo, r, phi, 0.0);
    CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
  }
}
