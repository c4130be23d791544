#include <doctest.h>

#include <cmath>
#include <random>

#include "eosvac/units.hpp"

using namespace eosvac::units;

TEST_CASE("thz_to_angular") {
  CHECK(thz_to_angular(0.0) == 0.0);
  CHECK(thz_to_angular(1.0) == doctest::Approx(6.283185307e12).epsilon(1e-10));
  CHECK(std::abs(thz_to_angular(255.0) - 2.0 * M_PI * 255e12) < 1e10);
  CHECK(std::abs(thz_to_angular(255.0) - 1.60221e15) < 1e10);
}

TEST_CASE("wavenumber_cm_to_angular") {
  CHECK(wavenumber_cm_to_angular(0.0) == 0.0);
  // 2 pi c0 * 17700 and 2 pi c0 * 20600 evaluated directly.
  CHECK(std::abs(wavenumber_cm_to_angular(177.0) - 3.33406327413667e13) < 1e9);
  CHECK(std::abs(wavenumber_cm_to_angular(206.0) - 3.88032222865624e13) < 1e9);
}

TEST_CASE("conversions round-trip to 1e-12") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double nu = dist(rng);
    CHECK(angular_to_thz(thz_to_angular(nu)) == doctest::Approx(nu).epsilon(1e-12));
    CHECK(angular_to_wavenumber_cm(wavenumber_cm_to_angular(nu)) ==
          doctest::Approx(nu).epsilon(1e-12));
  }
}

TEST_CASE("CODATA constants") {
  CHECK(c0 == 2.99792458e8);
  CHECK(hbar == 1.054571817e-34);
  CHECK(eps0 == 8.8541878128e-12);
}
