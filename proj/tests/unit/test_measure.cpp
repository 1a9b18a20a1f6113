#include <cmath>
#include <random>

#include "doctest.h"
#include "orlicz/corpus.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/numerics.hpp"
#include "support.hpp"

using namespace orlicz;
using orlicz::testing::rel_close;

namespace {

MeasurableSet random_intervals(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> endpoint(-20, 20);
  std::vector<Interval> pieces;
  for (int i = count(rng); i > 0; --i) {
    int a = endpoint(rng);
    int b = endpoint(rng);
    if (a > b) std::swap(a, b);
    pieces.push_back({a / 4.0, b / 4.0});
  }
  return MeasurableSet::intervals(pieces);
}

MeasurableSet random_integers(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<int> element(-10, 10);
  std::vector<std::int64_t> elems;
  for (int i = count(rng); i > 0; --i) elems.push_back(element(rng));
  return MeasurableSet::integers(elems);
}

}  // namespace

TEST_SUITE("measure") {
  TEST_CASE("measures of sets") {
    const auto line = MeasureSpace::lebesgue_line();
    CHECK(measure_of(line, MeasurableSet::intervals({{0, 2}, {3, 4}})) == 3.0);
    CHECK(measure_of(MeasureSpace::counting_integers(), MeasurableSet::integers({1, 5, 7})) == 3.0);
    CHECK(measure_of(line, MeasurableSet::intervals({})) == 0.0);
    CHECK(std::isinf(measure_of(line, MeasurableSet::intervals({{0, kInfinity}}))));
  }

  TEST_CASE("kind mismatch and finite space bounds") {
    CHECK_THROWS_AS(measure_of(MeasureSpace::lebesgue_line(), MeasurableSet::integers({1})), ArgumentError);
    CHECK_THROWS_AS(measure_of(MeasureSpace::counting_integers(), MeasurableSet::intervals({{0, 1}})), ArgumentError);
    const auto k5 = MeasureSpace::counting_finite(5);
    CHECK(measure_of(k5, MeasurableSet::integers({1, 5})) == 2.0);
    CHECK_THROWS_AS(measure_of(k5, MeasurableSet::integers({0})), ArgumentError);
    CHECK_THROWS_AS(measure_of(k5, MeasurableSet::integers({6})), ArgumentError);
    CHECK_FALSE(belongs_to(k5, MeasurableSet::integers({6})));
    CHECK_THROWS_AS(MeasureSpace::counting_finite(0), ArgumentError);
    CHECK_THROWS_AS(set_union(MeasurableSet::integers({1}), MeasurableSet::intervals({{0, 1}})), ArgumentError);
  }

  TEST_CASE("set operations") {
    const auto u = set_union(MeasurableSet::intervals({{0, 2}}), MeasurableSet::intervals({{1, 3}}));
    CHECK(u == MeasurableSet::intervals({{0, 3}}));
    CHECK(set_intersect(MeasurableSet::intervals({{0, 1}}), MeasurableSet::intervals({{1, 2}})).empty());
    CHECK(set_union(MeasurableSet::integers({1, 2}), MeasurableSet::integers({2, 3})) ==
          MeasurableSet::integers({1, 2, 3}));
    CHECK(set_difference(MeasurableSet::intervals({{0, 4}}), MeasurableSet::intervals({{1, 2}})) ==
          MeasurableSet::intervals({{0, 1}, {2, 4}}));
    CHECK(set_difference(MeasurableSet::integers({1, 2, 3}), MeasurableSet::integers({2})) ==
          MeasurableSet::integers({1, 3}));
  }

  TEST_CASE("normalization") {
    const IntervalUnion touching({{2, 3}, {0, 1}, {1, 2}, {5, 5}});
    REQUIRE(touching.pieces().size() == 1);
    CHECK(touching.pieces()[0] == Interval{0, 3});
    CHECK(touching.contains(0.0));
    CHECK_FALSE(touching.contains(3.0));
    CHECK_THROWS_AS(IntervalUnion({{std::nan(""), 1}}), ArgumentError);
    const IntegerSet runs({5, 3, 4, 9, 3});
    CHECK(runs.runs().size() == 2);
    CHECK(runs.cardinality() == 4);
    CHECK(runs.min() == 3);
    CHECK(runs.max() == 9);
    CHECK(runs.elements() == std::vector<std::int64_t>{3, 4, 5, 9});
  }

  TEST_CASE("lattice laws and inclusion-exclusion") {
    std::mt19937_64 rng(2024);
    const auto line = MeasureSpace::lebesgue_line();
    const auto ints = MeasureSpace::counting_integers();
    for (int i = 0; i < 300; ++i) {
      const bool on_line = i % 2 == 0;
      const auto a = on_line ? random_intervals(rng) : random_integers(rng);
      const auto b = on_line ? random_intervals(rng) : random_integers(rng);
      const auto& space = on_line ? line : ints;
      CHECK(set_union(a, a) == set_normalize(a));
      CHECK(set_intersect(a, a) == set_normalize(a));
      CHECK(set_union(a, b) == set_union(b, a));
      CHECK(set_intersect(a, b) == set_intersect(b, a));
      CHECK(set_union(a, set_intersect(a, b)) == set_normalize(a));
      CHECK(set_intersect(a, set_union(a, b)) == set_normalize(a));
      const double lhs = measure_of(space, set_union(a, b)) + measure_of(space, set_intersect(a, b));
      const double rhs = measure_of(space, a) + measure_of(space, b);
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("distribution of simple functions") {
    const auto line = MeasureSpace::lebesgue_line();
    const auto ind = FunctionSpec::indicator(MeasurableSet::intervals({{0, 2}}));
    CHECK(distribution(line, ind, 0.5) == 2.0);
    CHECK(distribution(line, ind, 1.0) == 0.0);
    const auto s = FunctionSpec::simple(
        {{MeasurableSet::intervals({{0, 1}}), 3.0}, {MeasurableSet::intervals({{1, 2}}), 1.0}});
    CHECK(distribution(line, s, 2.0) == 1.0);
    CHECK(distribution(line, s, 0.0) == 2.0);
    CHECK(distribution(line, s, 3.0) == 0.0);
    CHECK(essential_sup(line, s) == 3.0);
    CHECK(superlevel_set(line, s, 2.0) == MeasurableSet::intervals({{0, 1}}));
  }

  TEST_CASE("simple pieces must be disjoint") {
    CHECK_THROWS_AS(FunctionSpec::simple({{MeasurableSet::intervals({{0, 2}}), 1.0},
                                          {MeasurableSet::intervals({{1, 3}}), 2.0}}),
                    ArgumentError);
  }

  TEST_CASE("distribution of the decaying family") {
    const auto line = MeasureSpace::lebesgue_line();
    const auto f = FunctionSpec::power_log_decay(1, 1);
    // |f| is symmetric and strictly decreasing in |x|, so {|f| > f(10)} = (-10, 10).
    CHECK(rel_close(distribution(line, f, f(10.0)), 20.0, 1e-10));
    // Grid-counting oracle at a generic level.
    const double level = 0.01;
    double count = 0.0;
    const double h = 1e-3;
    for (double x = -200.0; x < 200.0; x += h) count += f(x + 0.5 * h) > level ? h : 0.0;
    CHECK(rel_close(distribution(line, f, level), count, 1e-4));
    CHECK(std::isinf(distribution(line, f, 0.0)));
    const auto ints = MeasureSpace::counting_integers();
    CHECK(distribution(ints, f, f(10.0)) == 19.0);
    CHECK(distribution(ints, f, f(10.0) * (1 - 1e-12)) == 21.0);
  }

  TEST_CASE("distribution is nonincreasing") {
    const auto line = MeasureSpace::lebesgue_line();
    auto corpus = simple_corpus(5, 20, line);
    corpus.push_back(FunctionSpec::power_log_decay(2, 1));
    corpus.push_back(FunctionSpec::radial_power(0.25, 1.0));
    const auto grid = log_grid(1e-4, 1e2, 120);
    for (const auto& f : corpus) {
      double previous = kInfinity;
      for (double t : grid) {
        const double mu = distribution(line, f, t);
        CHECK(mu <= previous);
        previous = mu;
      }
    }
  }

  TEST_CASE("radial power") {
    const auto line = MeasureSpace::lebesgue_line();
    const auto f = FunctionSpec::radial_power(0.25, 1.0);
    // {|x|^{-1/4} > t} within B(0, 1) is |x| < t^{-4} for t > 1.
    CHECK(rel_close(distribution(line, f, 16.0), 2.0 * std::pow(16.0, -4.0), 1e-12));
    CHECK(distribution(line, f, 0.5) == 2.0);
    CHECK(std::isinf(essential_sup(line, f)));
  }

  TEST_CASE("simple lp modular matches the layer sum") {
    const auto line = MeasureSpace::lebesgue_line();
    for (const auto& f : simple_corpus(9, 10, line)) {
      const auto& s = std::get<fn::Simple>(f.variant());
      double direct = 0.0;
      for (const auto& piece : s.pieces) direct += std::pow(std::abs(piece.value), 3.0) * measure_of(line, piece.set);
      auto levels = distribution_breakpoints(line, f);
      std::sort(levels.begin(), levels.end());
      double layered = 0.0;
      double below = 0.0;
      for (double v : levels) {
        layered += (std::pow(v, 3.0) - std::pow(below, 3.0)) * distribution(line, f, below);
        below = v;
      }
      CHECK(rel_close(direct, layered, 1e-12));
    }
  }

  TEST_CASE("function and space compatibility") {
    CHECK_THROWS_AS(check_function_space(MeasureSpace::counting_integers(),
                                         FunctionSpec::indicator(MeasurableSet::intervals({{0, 1}}))),
                    ArgumentError);
    CHECK_NOTHROW(check_function_space(MeasureSpace::counting_integers(), FunctionSpec::power_log_decay(2, 1)));
  }

  TEST_CASE("abs power and scaling") {
    const auto line = MeasureSpace::lebesgue_line();
    const auto s = FunctionSpec::simple({{MeasurableSet::intervals({{0, 1}}), -2.0}});
    const auto sq = abs_power(s, 2.0);
    CHECK(sq(0.5) == 4.0);
    CHECK(scale_function(s, 0.5)(0.5) == -1.0);
    CHECK_THROWS_AS(scale_function(FunctionSpec::power_log_decay(1, 1), 2.0), ArgumentError);
    const auto g = FunctionSpec::power_log_decay(2, 1);
    CHECK(rel_close(abs_power(g, 2.0)(3.0), std::pow(g(3.0), 2.0), 1e-14));
    CHECK(distribution(line, abs_power(g, 2.0), 0.04) == doctest::Approx(distribution(line, g, 0.2)));
  }
}
