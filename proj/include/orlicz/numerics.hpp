#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

/// n points spaced evenly in log scale, both endpoints included.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// inf{s >= 0 : f(s) > level} for a nondecreasing f.
///
/// The bracket is located by doubling or halving from s = 1 and then
/// bisected down to adjacent doubles, so the result is the smallest
/// representable s found with f(s) > level. Returns +inf when f(s) <= level
/// for every s up to `search_bound`.
template <typename F>
double monotone_generalized_inverse(F&& f, double level, double search_bound = 1e300) {
  if (f(0.0) > level) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  if (f(hi) > level) {
    while (hi > 1e-300 && f(hi * 0.5) > level) hi *= 0.5;
    if (!(hi > 1e-300)) return hi;
    lo = hi * 0.5;
  } else {
    lo = hi;
    while (true) {
      hi = lo * 2.0;
      if (hi > search_bound) return kInfinity;
      if (f(hi) > level) break;
      lo = hi;
    }
  }
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (f(mid) > level) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

/// Maximizer and maximum of a unimodal function on [lo, hi] by golden-section
/// search, stopping once the bracket is narrower than rel_width * max(|hi|, tiny).
template <typename F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi, double rel_width = 1e-12) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  const double scale = std::max(std::abs(hi), 1e-300);
  for (int iter = 0; iter < 400 && (b - a) > rel_width * scale; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  double best_x = c;
  double best = fc;
  for (double x : {a, d, b}) {
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return {best_x, best};
}

/// Least-squares slope of y against x.
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Relative difference |a - b| / max(|a|, |b|), zero when both vanish.
double relative_gap(double a, double b);

}  // namespace orlicz
