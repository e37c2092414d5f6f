#include <doctest.h>

#include <cmath>

#include "hetpref/link.hpp"
#include "hetpref/rng.hpp"

using namespace hetpref;

TEST_CASE("logistic link values") {
  LinkFunction f;
  CHECK(link(0.0, LinkMode::value, f) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(link(0.5, LinkMode::inverse, f) == doctest::Approx(0.0).epsilon(1e-15));
  // Direct high-precision evaluation of 1/(1 + e^-1).
  CHECK(link(1.0, LinkMode::value, f) ==
        doctest::Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-14));
  CHECK(link(1.0, LinkMode::value, f) == doctest::Approx(0.7310585786).epsilon(1e-9));
}

TEST_CASE("temperature scales the argument") {
  LinkFunction f{LinkKind::logistic, 2.0};
  CHECK(f.value(2.0) == doctest::Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-14));
  CHECK(f.first_deriv(0.0) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("derivatives match finite differences") {
  LinkFunction f{LinkKind::logistic, 1.7};
  double h = 1e-6;
  for (double z : {-3.0, -0.4, 0.0, 0.9, 4.2}) {
    double d1 = (f.value(z + h) - f.value(z - h)) / (2 * h);
    double d2 = (f.first_deriv(z + h) - f.first_deriv(z - h)) / (2 * h);
    CHECK(f.first_deriv(z) == doctest::Approx(d1).epsilon(1e-7));
    CHECK(f.second_deriv(z) == doctest::Approx(d2).epsilon(1e-6));
  }
}

TEST_CASE("link properties over random draws") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LinkFunction f{LinkKind::logistic, 0.25 + 3.0 * rng.uniform()};
    double z = 40.0 * (rng.uniform() - 0.5);
    double v = f.value(z);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    CHECK(v + f.value(-z) == doctest::Approx(1.0).epsilon(1e-12));
    if (std::abs(z) <= 20.0 * f.temperature) {
      CHECK(f.inverse(v) == doctest::Approx(z).epsilon(1e-9));
    }
  }
}

TEST_CASE("inverse rejects arguments outside (0,1)") {
  LinkFunction f;
  CHECK_THROWS_AS(f.inverse(0.0), std::domain_error);
  CHECK_THROWS_AS(f.inverse(1.0), std::domain_error);
  CHECK_THROWS_AS(f.inverse(-0.2), std::domain_error);
}
