#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/young.hpp"
#include "support.hpp"

using namespace orlicz;
using orlicz::testing::rel_close;

namespace {

// Reference values from tests/oracles/compute_oracles.py (mpmath, 40 digits).
constexpr double kLLogLDerivativeAtOne = 1.636294361119890618834;
constexpr double kLLogLInverseAtOne = 1.0 / 1.323274916467843008458;
struct ConjugatePoint {
  double t;
  double value;
};
constexpr ConjugatePoint kLLogLConjugate[] = {
    {4.0, 17.29037565769677534893},
    {5.0, 51.67772447926824766528},
    {6.0, 145.4430802978464249530},
    {8.0, 1093.637254436487936395},
};
struct RatioPoint {
  double t;
  double ratio;
};
constexpr RatioPoint kLLogLONeil[] = {
    {0.1, 1.283627968638026503838},
    {1.0, 1.588852708118691157217},
    {10.0, 1.718157356915108131357},
    {100.0, 1.627422301646617136017},
};
constexpr double kExpONeilAtOne = 1.884169385363720109902;

std::vector<YoungFunction> families() {
  return {YoungFunction::power(2),
          YoungFunction::power(1.5),
          YoungFunction::llogl(),
          YoungFunction::exp_minus_one(),
          YoungFunction::linear(),
          power_compose(YoungFunction::power(3), 2),
          YoungFunction::tabulated({{0, 0}, {1, 0.5}, {2, 2}, {4, 8}})};
}

}  // namespace

TEST_SUITE("young") {
  TEST_CASE("evaluation") {
    CHECK(eval_young(YoungFunction::power(2), 3.0) == 9.0);
    CHECK(eval_young(YoungFunction::llogl(), 0.0) == 0.0);
    CHECK(rel_close(eval_young(YoungFunction::exp_minus_one(), 1.0), std::numbers::e - 1.0, 1e-15));
    CHECK(YoungFunction::linear()(2.5) == 2.5);
    CHECK_THROWS_AS(eval_young(YoungFunction::power(2), -1.0), DomainError);
    CHECK_THROWS_AS(eval_young(YoungFunction::power(2), std::nan("")), DomainError);
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(YoungFunction::power(-1.0), ArgumentError);
    CHECK_THROWS_AS(YoungFunction::power(0.0), ArgumentError);
    CHECK_THROWS_AS(power_compose(YoungFunction::power(2), 0.0), ArgumentError);
    CHECK_THROWS_AS(YoungFunction::tabulated({{1, 1}, {2, 3}}), ArgumentError);
    CHECK_THROWS_AS(YoungFunction::tabulated({{0, 0}, {2, 1}, {1, 3}}), ArgumentError);
    CHECK_THROWS_AS(YoungFunction::tabulated({{0, 0}}), ArgumentError);
  }

  TEST_CASE("domain cap") {
    const YoungFunction capped(family::Power{2}, 3.0);
    CHECK(capped(3.0) == 9.0);
    CHECK(std::isinf(capped(3.5)));
  }

  TEST_CASE("left derivative closed forms") {
    CHECK(rel_close(left_derivative(YoungFunction::power(2), 1.0), 2.0, 1e-15));
    CHECK(left_derivative(YoungFunction::linear(), 5.0) == 1.0);
    const auto llogl = YoungFunction::llogl();
    CHECK(rel_close(left_derivative(llogl, 1.0), kLLogLDerivativeAtOne, 1e-14));
    CHECK(left_derivative(llogl, 1.0) >= llogl(1.0));
    CHECK(left_derivative(llogl, 1.0) <= llogl(2.0));
    CHECK_THROWS_AS(left_derivative(llogl, 0.0), DomainError);
  }

  TEST_CASE("left derivative of a tabulated function is the left slope") {
    const auto tab = YoungFunction::tabulated({{0, 0}, {1, 0.5}, {2, 2}, {4, 8}});
    CHECK(left_derivative(tab, 1.0) == doctest::Approx(0.5));
    CHECK(left_derivative(tab, 1.5) == doctest::Approx(1.5));
    CHECK(left_derivative(tab, 3.0) == doctest::Approx(3.0));
  }

  TEST_CASE("closed form and numeric derivatives agree") {
    for (const auto& phi : families()) {
      for (double t : log_grid(1e-3, 1e2, 41)) {
        INFO(phi.describe(), " t=", t);
        const double closed = left_derivative(phi, t);
        const double numeric = numeric_left_derivative(phi, t);
        CHECK(rel_close(closed, numeric, 1e-5));
      }
    }
  }

  TEST_CASE("derivative sandwich") {
    for (const auto& phi : families()) {
      for (double t : log_grid(1e-3, 1e2, 200)) {
        INFO(phi.describe(), " t=", t);
        const double d = left_derivative(phi, t);
        CHECK(phi(t) / t <= d * (1 + 1e-12));
        CHECK(d <= phi(2 * t) / t * (1 + 1e-12));
      }
    }
  }

  TEST_CASE("complementary function") {
    const auto sq = YoungFunction::power(2);
    for (double t : {0.5, 1.0, 2.0, 7.0}) CHECK(rel_close(complementary(sq, t), t * t / 4.0, 1e-12));
    const auto lin = YoungFunction::linear();
    CHECK(complementary(lin, 0.5) == 0.0);
    CHECK(std::isinf(complementary(lin, 2.0)));
    const auto ex = YoungFunction::exp_minus_one();
    CHECK(complementary(ex, 0.5) == 0.0);
    CHECK(rel_close(complementary(ex, 3.0), 3.0 * std::log(3.0) - 2.0, 1e-12));
  }

  TEST_CASE("LLogL conjugate against the maximization oracle") {
    const auto llogl = YoungFunction::llogl();
    for (const auto& [t, value] : kLLogLConjugate) {
      INFO("t=", t);
      CHECK(rel_close(complementary(llogl, t), value, 1e-9));
      CHECK(rel_close(complementary_numeric(llogl, t), value, 1e-8));
      const double band = complementary(llogl, t) / std::exp(t);
      CHECK(band > 0.31);
      CHECK(band < 0.37);
    }
  }

  TEST_CASE("Young inequality") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    for (const auto& phi : {YoungFunction::power(2), YoungFunction::llogl(), YoungFunction::exp_minus_one()}) {
      for (int i = 0; i < 200; ++i) {
        const double s = std::exp(u(rng));
        const double t = std::exp(u(rng));
        CHECK(s * t <= phi(s) + complementary(phi, t) + 1e-9 * (1 + s * t));
      }
    }
  }

  TEST_CASE("generalized inverse") {
    CHECK(rel_close(generalized_inverse(YoungFunction::power(2), 9.0), 3.0, 1e-12));
    CHECK(rel_close(generalized_inverse(YoungFunction::exp_minus_one(), std::numbers::e - 1.0), 1.0, 1e-12));
    CHECK(rel_close(generalized_inverse(YoungFunction::llogl(), 1.0), kLLogLInverseAtOne, 1e-12));
    CHECK(generalized_inverse(YoungFunction::power(2), 0.0) == 0.0);
  }

  TEST_CASE("validation") {
    const auto grid = default_young_grid();
    const auto sqrt_fn = validate_young(YoungFunction::power(0.5), grid);
    CHECK_FALSE(sqrt_fn.convexity.ok);
    CHECK(sqrt_fn.convexity.first_violation.has_value());
    CHECK_FALSE(sqrt_fn.passed());
    CHECK(validate_young(YoungFunction::power(2), grid).passed());
    CHECK(validate_young(YoungFunction::llogl(), grid).passed());
    CHECK(validate_young(YoungFunction::exp_minus_one(), log_grid(1e-6, 1e2, 200)).passed());
    CHECK_THROWS_AS(validate_young(YoungFunction::power(2), {}), ArgumentError);
  }

  TEST_CASE("nabla2") {
    const auto ks = default_nabla2_candidates();
    const auto grid = default_young_grid();
    const auto sq = check_nabla2(YoungFunction::power(2), ks, grid);
    REQUIRE(sq.holds);
    CHECK(*sq.witness_k == 2.0);
    CHECK(sq.gamma.has_value());
    CHECK(check_nabla2(YoungFunction::exp_minus_one(), ks, grid).holds);
    CHECK_FALSE(check_nabla2(YoungFunction::linear(), ks, grid).holds);
    const auto llogl = check_nabla2(YoungFunction::llogl(), ks, grid);
    CHECK_FALSE(llogl.holds);
    CHECK(llogl.first_violation.has_value());
  }

  TEST_CASE("LLogL nabla2 ratio tends to one half") {
    const auto llogl = YoungFunction::llogl();
    const double t = 1e6;
    for (double k : {2.0, 4.0, 8.0}) {
      const double ratio = llogl(k * t) / (2 * k * llogl(t));
      CHECK(ratio < 1.0);
      CHECK(ratio == doctest::Approx(0.5 * std::log(3 + k * t) / std::log(3 + t)).epsilon(1e-12));
    }
  }

  TEST_CASE("nabla2 exponent") {
    const auto grid = default_young_grid();
    const auto cube = estimate_nabla2_exponent(YoungFunction::power(3), grid);
    CHECK(cube.gamma == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(cube.constant == doctest::Approx(1.0).epsilon(1e-6));
    const auto composed = estimate_nabla2_exponent(power_compose(YoungFunction::power(2), 1.0), grid);
    CHECK(composed.gamma == doctest::Approx(2.0).epsilon(1e-6));
    const auto ex = estimate_nabla2_exponent(YoungFunction::exp_minus_one(), log_grid(1e-3, 1e3, 200));
    CHECK(ex.gamma > 1.0);
    CHECK(std::isfinite(ex.constant));
    CHECK_THROWS_AS(estimate_nabla2_exponent(YoungFunction::linear(), grid), PreconditionError);
  }

  TEST_CASE("O'Neil bounds") {
    const auto sq = check_oneil(YoungFunction::power(2), {1.0});
    CHECK(sq.holds);
    CHECK(sq.min_ratio >= 1.0);
    CHECK(sq.max_ratio == doctest::Approx(2.0).epsilon(1e-14));
    std::vector<double> grid;
    for (const auto& pt : kLLogLONeil) grid.push_back(pt.t);
    const auto llogl = check_oneil(YoungFunction::llogl(), grid);
    CHECK(llogl.holds);
    REQUIRE(llogl.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      INFO("t=", grid[i]);
      CHECK(rel_close(llogl.points[i].ratio, kLLogLONeil[i].ratio, 1e-8));
    }
    const auto ex = check_oneil(YoungFunction::exp_minus_one(), {1.0});
    CHECK(rel_close(ex.points[0].ratio, kExpONeilAtOne, 1e-8));
  }

  TEST_CASE("power equivalence") {
    const auto exact = check_power_equivalence([](double t) { return t * t; }, 2.0, 1.5, 1e3);
    CHECK(exact.holds);
    CHECK(exact.c1 == doctest::Approx(1.0));
    CHECK(exact.c2 == doctest::Approx(1.0));
    const auto logmap =
        check_power_equivalence([](double t) { return 1.0 / std::log1p(1.0 / t); }, 1.0, 1.0 + 1e-9, 1e6);
    CHECK(logmap.holds);
    CHECK(logmap.c1 >= 1.0);
    CHECK(logmap.c1 < 1.0 + 1e-6);
    CHECK(logmap.c2 == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-6));
    const auto llogl = YoungFunction::llogl();
    const auto inv = check_power_equivalence(
        [&](double t) { return 1.0 / generalized_inverse(llogl, 1.0 / t); }, 1.0, 1.0 + 1e-9, 1e4);
    CHECK(inv.holds);
    CHECK_THROWS_AS(check_power_equivalence([](double) { return std::nan(""); }, 1.0, 2.0, 3.0), EvaluationError);
  }

  TEST_CASE("power composition") {
    const auto composed = power_compose(YoungFunction::power(3), 2.0);
    for (double t : {0.5, 1.0, 4.0, 9.0}) CHECK(rel_close(composed(t), std::pow(t, 1.5), 1e-14));
    const auto llogl = YoungFunction::llogl();
    const auto lq = power_compose(llogl, 3.0);
    for (double t : {0.2, 2.0, 30.0}) CHECK(rel_close(lq(std::pow(t, 3.0)), llogl(t), 1e-13));
  }
}
