#include "orlicz/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <optional>
#include <utility>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr int kMaxDepth = 48;
constexpr int kCellCount = 9;  // v-cells [2^-j-1, 2^-j], j < kCellCount, reach |log t| ~ 1000
constexpr double kStallRatio = 0.9;
constexpr double kNudge = 4.0 * DBL_EPSILON;

struct Simpson {
  const std::function<double(double)>& g;
  std::size_t* budget;
  double abs_floor;

  double step(double a, double fa, double m, double fm, double b, double fb, double whole, double eps, int depth) const {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (!std::isfinite(left + right)) return left + right;
    const bool exhausted = budget != nullptr && *budget == 0;
    if (depth <= 0 || exhausted || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (budget != nullptr) --*budget;
    return step(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1) +
           step(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1);
  }
};

double panel_sum(const std::function<double(double)>& g, double a, double b, double rel, double abs_floor,
                 std::size_t* budget) {
  constexpr int kPanels = 16;
  const double w = (b - a) / kPanels;
  std::vector<double> x(2 * kPanels + 1);
  std::vector<double> f(2 * kPanels + 1);
  for (int i = 0; i <= 2 * kPanels; ++i) {
    x[i] = i == 2 * kPanels ? b : a + 0.5 * w * i;
    f[i] = g(x[i]);
  }
  double coarse = 0.0;
  std::vector<double> whole(kPanels);
  for (int i = 0; i < kPanels; ++i) {
    whole[i] = (x[2 * i + 2] - x[2 * i]) / 6.0 * (f[2 * i] + 4.0 * f[2 * i + 1] + f[2 * i + 2]);
    coarse += whole[i];
  }
  if (!std::isfinite(coarse)) return coarse;
  const double eps = std::max(rel * std::abs(coarse), abs_floor) / kPanels;
  const Simpson s{g, budget, abs_floor};
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    total += s.step(x[2 * i], f[2 * i], x[2 * i + 1], f[2 * i + 1], x[2 * i + 2], f[2 * i + 2], whole[i], eps, kMaxDepth);
  }
  return total;
}

struct EndResult {
  double value = 0.0;
  double error = 0.0;
  bool diverges = false;
  bool truncated = false;
  double reached = 0.0;
};

// Two rounds of Aitken's delta-squared on the partial sums of the cells.
// Returns {limit, |round 2 - round 1|}, or nothing when a round degenerates.
std::optional<std::pair<double, double>> aitken_tail(const std::vector<double>& cells) {
  if (cells.size() < 5) return std::nullopt;
  std::vector<double> s(cells.size());
  double run = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) s[i] = run += cells[i];
  const double partial = s.back();
  double previous = partial;
  for (int round = 0; round < 2; ++round) {
    std::vector<double> next;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const double d1 = s[i + 1] - s[i];
      const double d2 = s[i + 2] - s[i + 1];
      const double den = d2 - d1;
      if (std::abs(den) <= 1e-14 * std::abs(s[i + 2])) {
        next.push_back(s[i + 2]);
        continue;
      }
      next.push_back(s[i + 2] - d2 * d2 / den);
    }
    if (!std::isfinite(next.back()) || next.back() < partial - 1e-12 * std::abs(partial)) return std::nullopt;
    if (round == 1) return std::make_pair(next.back(), std::abs(next.back() - previous));
    previous = next.back();
    s = std::move(next);
  }
  return std::nullopt;
}

// Integral over one unbounded end. `to_t` maps v in (0, 1] to t.
EndResult integrate_end(const std::function<double(double)>& h, const std::function<double(double)>& to_t,
                        const QuadratureSettings& settings, double running_total) {
  EndResult out;
  std::vector<double> cells;
  for (int j = 0; j < kCellCount; ++j) {
    const double hi = std::ldexp(1.0, -j);
    const double lo = std::ldexp(1.0, -j - 1);
    std::size_t budget = settings.max_subdivisions;
    const std::function<double(double)> g = [&](double v) {
      const double value = h(to_t(v));
      return value == 0.0 ? 0.0 : value / (v * v);
    };
    const double cell = panel_sum(g, lo, hi, settings.relative_tolerance, settings.absolute_floor, &budget);
    if (!std::isfinite(cell)) {
      // Overflow of intermediate quantities far out after clean geometric
      // decay is extrapolated instead of read as divergence.
      const std::size_t n = cells.size();
      if (n >= 3 && cells[n - 2] > 0.0 && cells[n - 1] < kStallRatio * cells[n - 2]) {
        const double ratio = cells[n - 1] / cells[n - 2];
        const double remainder = cells[n - 1] * ratio / (1.0 - ratio);
        out.value += remainder;
        out.error = std::abs(remainder);
        out.truncated = true;
        return out;
      }
      out.reached = to_t(lo);
      out.diverges = true;
      out.value = kInfinity;
      return out;
    }
    out.reached = to_t(lo);
    cells.push_back(cell);
    out.value += cell;
    if (running_total + out.value > 1.0 / settings.absolute_floor) {
      out.diverges = true;
      return out;
    }
    const double scale = std::max(settings.relative_tolerance * (running_total + out.value), settings.absolute_floor);
    if (j >= 1 && cell == 0.0 && cells[j - 1] == 0.0) return out;
    if (j >= 2 && cell <= scale) {
      const double ratio = cells[j - 1] > 0.0 ? cell / cells[j - 1] : 0.0;
      if (ratio < kStallRatio) {
        const double remainder = cell * ratio / (1.0 - ratio);
        out.value += remainder;
        out.error = std::abs(remainder) + scale;
        return out;
      }
    }
  }
  // Cells exhausted without meeting the tolerance. Three non-decaying cells
  // at the far end certify divergence; otherwise extrapolate the remainder.
  const std::size_t n = cells.size();
  bool stalled = true;
  for (std::size_t i = n - 3; i < n; ++i) {
    if (!(cells[i] >= kStallRatio * cells[i - 1])) stalled = false;
  }
  if (stalled) {
    out.diverges = true;
    return out;
  }
  const double ratio = cells[n - 2] > 0.0 ? cells[n - 1] / cells[n - 2] : 0.0;
  const double remainder = cells[n - 1] * ratio / (1.0 - ratio);
  const auto accelerated = aitken_tail(cells);
  if (accelerated) {
    out.value = accelerated->first;
    out.error = accelerated->second;
  } else {
    out.value += remainder;
    out.error = std::abs(remainder);
  }
  return out;
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(relative_tolerance > 0.0)) throw ArgumentError("quadrature: relative_tolerance must be positive");
  if (!(absolute_floor > 0.0)) throw ArgumentError("quadrature: absolute_floor must be positive");
  if (max_subdivisions == 0) throw ArgumentError("quadrature: max_subdivisions must be positive");
  if (const auto* tr = std::get_if<transform::Truncated>(&transform)) {
    if (!(tr->t_max > 0.0)) throw ArgumentError("quadrature: t_max must be positive");
  }
}

std::string to_string(ValueStatus status) {
  switch (status) {
    case ValueStatus::finite:
      return "finite";
    case ValueStatus::infinite:
      return "infinite";
    case ValueStatus::zero:
      return "zero";
  }
  return "?";
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double relative_tolerance,
                        double absolute_floor, std::size_t* budget) {
  const double na = a + kNudge * std::max(std::abs(a), DBL_MIN);
  const double nb = b - kNudge * std::max(std::abs(b), DBL_MIN);
  if (!(na < nb)) return 0.0;
  return panel_sum(g, na, nb, relative_tolerance, absolute_floor, budget);
}

QuadratureResult integrate_dlog(const std::function<double(double)>& h, std::vector<double> knots, double lower,
                                double upper, const QuadratureSettings& settings) {
  settings.validate();
  if (std::isnan(lower) || std::isnan(upper) || lower < 0.0) throw ArgumentError("integrate_dlog: need 0 <= lower");
  QuadratureResult result;
  if (const auto* tr = std::get_if<transform::Truncated>(&settings.transform)) {
    if (tr->t_max < upper) {
      upper = tr->t_max;
      result.truncation = upper;
    }
  }
  if (!(lower < upper)) return result;

  std::erase_if(knots, [&](double k) { return !(k > lower && k < upper) || !std::isfinite(k); });
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  if (knots.empty() && (lower == 0.0 || std::isinf(upper))) {
    double anchor = 1.0;
    if (lower > 0.0) anchor = 2.0 * lower;
    if (std::isfinite(upper)) anchor = 0.5 * upper;
    if (lower == 0.0 && std::isfinite(upper)) anchor = 0.5 * upper;
    knots.push_back(anchor);
  }

  double total = 0.0;
  double error = 0.0;
  auto mark_infinite = [&](double where) {
    result.value = kInfinity;
    result.error_estimate = kInfinity;
    result.status = ValueStatus::infinite;
    result.truncation = where;
    return result;
  };

  std::vector<double> bounds;
  if (lower > 0.0) bounds.push_back(lower);
  bounds.insert(bounds.end(), knots.begin(), knots.end());
  if (std::isfinite(upper)) bounds.push_back(upper);

  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i];
    const double b = bounds[i + 1];
    const double ta = a * (1.0 + kNudge);
    const double tb = b * (1.0 - kNudge);
    if (!(ta < tb)) continue;
    const std::function<double(double)> g = [&](double s) { return h(std::clamp(std::exp(s), ta, tb)); };
    std::size_t budget = settings.max_subdivisions;
    const double piece =
        adaptive_simpson(g, std::log(a), std::log(b), settings.relative_tolerance, settings.absolute_floor, &budget);
    if (!std::isfinite(piece)) return mark_infinite(b);
    total += piece;
    error += settings.relative_tolerance * std::abs(piece);
    if (total > 1.0 / settings.absolute_floor) return mark_infinite(b);
  }

  if (lower == 0.0) {
    const double k0 = knots.front();
    const double top = k0 * (1.0 - kNudge);
    const auto head = integrate_end(
        h, [k0, top](double v) { return std::min(top, k0 * std::exp(1.0 - 1.0 / v)); }, settings, total);
    if (head.diverges) return mark_infinite(head.reached);
    total += head.value;
    error += head.error;
    if (head.truncated) result.truncation = head.reached;
  }
  if (std::isinf(upper)) {
    const double kl = knots.back();
    const double bottom = kl * (1.0 + kNudge);
    const auto tail = integrate_end(
        h, [kl, bottom](double v) { return std::max(bottom, kl * std::exp(1.0 / v - 1.0)); }, settings, total);
    if (tail.diverges) return mark_infinite(tail.reached);
    total += tail.value;
    error += tail.error;
    if (tail.truncated) result.truncation = tail.reached;
  }

  result.value = total;
  result.error_estimate = error;
  result.status = total == 0.0 ? ValueStatus::zero : ValueStatus::finite;
  return result;
}

}  // namespace orlicz
