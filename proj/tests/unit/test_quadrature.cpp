#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"
#include "support.hpp"

using namespace orlicz;
using orlicz::testing::rel_close;

TEST_SUITE("quadrature") {
  TEST_CASE("exponential tails in log t") {
    const auto r = integrate_dlog([](double t) { return std::exp(-std::abs(std::log(t))); }, {1.0}, 0, kInfinity);
    CHECK(r.status == ValueStatus::finite);
    CHECK(rel_close(r.value, 2.0, 1e-10));
  }

  TEST_CASE("power tails in log t") {
    const auto sq = integrate_dlog([](double t) { return std::pow(1 + std::abs(std::log(t)), -2.0); }, {1.0}, 0,
                                   kInfinity);
    CHECK(rel_close(sq.value, 2.0, 1e-10));
    const auto slow = integrate_dlog([](double t) { return std::pow(1 + std::abs(std::log(t)), -1.5); }, {1.0}, 0,
                                     kInfinity);
    CHECK(rel_close(slow.value, 4.0, 1e-9));
    const auto arctan = integrate_dlog(
        [](double t) {
          const double s = std::log(t);
          return 1.0 / (1.0 + s * s);
        },
        {1.0}, 0, kInfinity);
    CHECK(rel_close(arctan.value, std::numbers::pi, 1e-6));
    CHECK(std::abs(arctan.value - std::numbers::pi) <= arctan.error_estimate);
  }

  TEST_CASE("finite ranges") {
    const auto r = integrate_dlog([](double t) { return t; }, {}, 1.0, 3.0);
    CHECK(rel_close(r.value, 2.0, 1e-10));
    const auto knots = integrate_dlog([](double t) { return t < 2.0 ? 1.0 : 0.0; }, {2.0}, 1.0, 4.0);
    CHECK(rel_close(knots.value, std::log(2.0), 1e-10));
    CHECK(integrate_dlog([](double) { return 1.0; }, {}, 2.0, 2.0).status == ValueStatus::zero);
  }

  TEST_CASE("divergence is certified") {
    const auto constant = integrate_dlog([](double) { return 1.0; }, {1.0}, 0, kInfinity);
    CHECK(constant.status == ValueStatus::infinite);
    CHECK(std::isinf(constant.value));
    const auto harmonic =
        integrate_dlog([](double t) { return 1.0 / (1.0 + std::abs(std::log(t))); }, {1.0}, 1.0, kInfinity);
    CHECK(harmonic.status == ValueStatus::infinite);
    REQUIRE(harmonic.truncation.has_value());
  }

  TEST_CASE("truncated transform") {
    QuadratureSettings s;
    s.transform = transform::Truncated{10.0};
    const auto r = integrate_dlog([](double) { return 1.0; }, {}, 1.0, kInfinity, s);
    CHECK(rel_close(r.value, std::log(10.0), 1e-10));
    REQUIRE(r.truncation.has_value());
    CHECK(*r.truncation == 10.0);
  }

  TEST_CASE("settings validation") {
    QuadratureSettings s;
    s.relative_tolerance = 0.0;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    s = {};
    s.max_subdivisions = 0;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    s = {};
    s.transform = transform::Truncated{-1.0};
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    CHECK_THROWS_AS(integrate_dlog([](double) { return 1.0; }, {}, -1.0, 1.0), ArgumentError);
  }

  TEST_CASE("adaptive simpson") {
    std::size_t budget = 2000;
    const double v = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-10, 1e-14, &budget);
    CHECK(rel_close(v, 2.0, 1e-9));
  }
}
