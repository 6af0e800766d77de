#include <doctest.h>

#include <cmath>

#include "ginprod/quadrature.hpp"

using namespace ginprod;

TEST_SUITE("quadrature") {
  TEST_CASE("adaptive Simpson on smooth integrands") {
    CHECK(adaptive_simpson([](double x) { return x * x; }, 0, 1, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0, M_PI, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(adaptive_simpson([](double x) { return std::exp(-x); }, 0, 40, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("depth limit reports non-convergence") {
    // A step discontinuity forces endless refinement at coarse depth.
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return x < 0.337 ? 0.0 : 1.0; }, 0, 1,
                                     1e-15, 6),
                    QuadratureError);
  }

  TEST_CASE("Bessel-type integral matches the standard-library K_0") {
    for (double r : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0})
      CHECK(bessel_k0_integral(r) ==
            doctest::Approx(2.0 * std::cyl_bessel_k(0.0, r)).epsilon(1e-9));
    CHECK_THROWS_AS(bessel_k0_integral(0.0), QuadratureError);
  }
}
