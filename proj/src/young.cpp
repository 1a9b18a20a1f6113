#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_finite_nonnegative(double t, const char* what) {
  if (std::isnan(t) || t < 0.0) {
    std::ostringstream os;
    os << what << ": argument must be >= 0, got " << t;
    throw DomainError(os.str());
  }
}

double tabulated_eval(const family::Tabulated& tab, double t) {
  const auto& k = tab.knots;
  if (t >= k.back().t) {
    const auto& a = k[k.size() - 2];
    const auto& b = k.back();
    const double slope = (b.value - a.value) / (b.t - a.t);
    return b.value + slope * (t - b.t);
  }
  auto it = std::upper_bound(k.begin(), k.end(), t,
                             [](double x, const family::Knot& kn) { return x < kn.t; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double w = (t - a.t) / (b.t - a.t);
  return a.value + w * (b.value - a.value);
}

double tabulated_left_slope(const family::Tabulated& tab, double t) {
  const auto& k = tab.knots;
  auto it = std::lower_bound(k.begin(), k.end(), t,
                             [](const family::Knot& kn, double x) { return kn.t < x; });
  if (it == k.end()) it = k.end() - 1;
  if (it == k.begin()) it = k.begin() + 1;
  const auto& b = *it;
  const auto& a = *(it - 1);
  return (b.value - a.value) / (b.t - a.t);
}

double raw_eval(const YoungFunction::Family& fam, double t) {
  return std::visit(
      overloaded{
          [t](const family::Power& f) { return std::pow(t, f.p); },
          [t](const family::LLogL&) { return t * std::log(3.0 + t); },
          [t](const family::ExpMinusOne&) { return std::expm1(t); },
          [t](const family::Linear&) { return t; },
          [t](const family::PowerComposed& f) { return eval_young(*f.base, std::pow(t, 1.0 / f.q)); },
          [t](const family::Tabulated& f) { return tabulated_eval(f, t); },
      },
      fam);
}

}  // namespace

YoungFunction::YoungFunction(Family fam, std::optional<double> domain_cap)
    : family_(std::move(fam)), domain_cap_(domain_cap) {
  if (domain_cap_ && !(*domain_cap_ > 0.0)) throw ArgumentError("domain_cap must be positive");
  std::visit(overloaded{
                 [](const family::Power& f) {
                   if (!(f.p > 0.0) || !std::isfinite(f.p)) throw ArgumentError("power: p must be a positive real");
                 },
                 [](const family::PowerComposed& f) {
                   if (!f.base) throw ArgumentError("power_composed: missing base");
                   if (!(f.q > 0.0) || !std::isfinite(f.q)) throw ArgumentError("power_composed: q must be a positive real");
                 },
                 [](const family::Tabulated& f) {
                   const auto& k = f.knots;
                   if (k.size() < 2) throw ArgumentError("tabulated: need at least two knots");
                   if (k.front().t != 0.0 || k.front().value != 0.0) {
                     throw ArgumentError("tabulated: first knot must be (0, 0)");
                   }
                   for (std::size_t i = 0; i < k.size(); ++i) {
                     if (!std::isfinite(k[i].t) || !std::isfinite(k[i].value)) {
                       throw ArgumentError("tabulated: knots must be finite");
                     }
                     if (i > 0 && !(k[i].t > k[i - 1].t)) throw ArgumentError("tabulated: knot abscissae must increase");
                   }
                 },
                 [](const auto&) {},
             },
             family_);
}

YoungFunction YoungFunction::power(double p) { return YoungFunction(family::Power{p}); }
YoungFunction YoungFunction::llogl() { return YoungFunction(family::LLogL{}); }
YoungFunction YoungFunction::exp_minus_one() { return YoungFunction(family::ExpMinusOne{}); }
YoungFunction YoungFunction::linear() { return YoungFunction(family::Linear{}); }
YoungFunction YoungFunction::tabulated(std::vector<family::Knot> knots) {
  return YoungFunction(family::Tabulated{std::move(knots)});
}

double YoungFunction::operator()(double t) const { return eval_young(*this, t); }

std::string YoungFunction::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const family::Power& f) { os << "power(p=" << f.p << ")"; },
                 [&](const family::LLogL&) { os << "llogl"; },
                 [&](const family::ExpMinusOne&) { os << "exp_minus_one"; },
                 [&](const family::Linear&) { os << "linear"; },
                 [&](const family::PowerComposed& f) { os << "power_composed(" << f.base->describe() << ", q=" << f.q << ")"; },
                 [&](const family::Tabulated& f) { os << "tabulated(" << f.knots.size() << " knots)"; },
             },
             family_);
  if (domain_cap_) os << "[cap=" << *domain_cap_ << "]";
  return os.str();
}

double eval_young(const YoungFunction& phi, double t) {
  check_finite_nonnegative(t, "eval_young");
  if (std::isinf(t)) return kInfinity;
  if (t == 0.0) return 0.0;
  if (phi.domain_cap() && t > *phi.domain_cap()) return kInfinity;
  return raw_eval(phi.family(), t);
}

double left_derivative(const YoungFunction& phi, double t) {
  if (std::isnan(t) || !(t > 0.0)) throw DomainError("left_derivative: t must be > 0");
  if (phi.domain_cap() && t > *phi.domain_cap()) return kInfinity;
  return std::visit(
      overloaded{
          [t](const family::Power& f) { return f.p == 1.0 ? 1.0 : f.p * std::pow(t, f.p - 1.0); },
          [t](const family::LLogL&) { return std::log(3.0 + t) + t / (3.0 + t); },
          [t](const family::ExpMinusOne&) { return std::exp(t); },
          [](const family::Linear&) { return 1.0; },
          [t](const family::PowerComposed& f) {
            // chain rule through the increasing inner map t -> t^{1/q}
            const double inner = std::pow(t, 1.0 / f.q);
            return left_derivative(*f.base, inner) * (inner / (f.q * t));
          },
          [t](const family::Tabulated& f) { return tabulated_left_slope(f, t); },
      },
      phi.family());
}

double numeric_left_derivative(const YoungFunction& phi, double t) {
  if (std::isnan(t) || !(t > 0.0)) throw DomainError("numeric_left_derivative: t must be > 0");
  const double h = std::min(std::max(t * 1e-6, 1e-12), 0.5 * t);
  const double ft = eval_young(phi, t);
  auto diff = [&](double step) { return (ft - eval_young(phi, t - step)) / step; };
  const double d1 = diff(h);
  const double d2 = diff(h / 2);
  const double d4 = diff(h / 4);
  const double r1 = 2.0 * d2 - d1;
  const double r2 = 2.0 * d4 - d2;
  return (4.0 * r2 - r1) / 3.0;
}

double complementary_numeric(const YoungFunction& phi, double t) {
  check_finite_nonnegative(t, "complementary");
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return kInfinity;
  const double cap = phi.domain_cap().value_or(kInfinity);
  auto objective = [&](double s) {
    const double v = eval_young(phi, s);
    return std::isinf(v) ? -kInfinity : s * t - v;
  };
  // The objective is concave for convex phi; expand until it stops increasing.
  double s_hi = std::min(1.0, cap);
  double f_hi = objective(s_hi);
  while (true) {
    double next = std::min(2.0 * s_hi, cap);
    if (next == s_hi) break;
    if (next > 1e300) return kInfinity;
    const double f_next = objective(next);
    s_hi = next;
    if (!(f_next > f_hi)) break;
    f_hi = f_next;
  }
  const auto [arg, best] = golden_section_max(objective, 0.0, s_hi, 1e-12);
  (void)arg;
  return std::max(best, 0.0);
}

double complementary(const YoungFunction& phi, double t) {
  check_finite_nonnegative(t, "complementary");
  if (phi.domain_cap()) return complementary_numeric(phi, t);
  return std::visit(
      overloaded{
          [t](const family::Power& f) -> double {
            if (t == 0.0) return 0.0;
            if (f.p < 1.0) return kInfinity;
            if (f.p == 1.0) return t <= 1.0 ? 0.0 : kInfinity;
            return (f.p - 1.0) * std::pow(t / f.p, f.p / (f.p - 1.0));
          },
          [t](const family::Linear&) -> double { return t <= 1.0 ? 0.0 : kInfinity; },
          [t](const family::ExpMinusOne&) -> double { return t <= 1.0 ? 0.0 : t * std::log(t) - t + 1.0; },
          [t](const family::Tabulated& f) -> double {
            const auto& k = f.knots;
            const double last_slope = (k.back().value - k[k.size() - 2].value) / (k.back().t - k[k.size() - 2].t);
            if (t > last_slope) return kInfinity;
            double best = 0.0;
            for (const auto& kn : k) best = std::max(best, kn.t * t - kn.value);
            return best;
          },
          [&phi, t](const auto&) -> double { return complementary_numeric(phi, t); },
      },
      phi.family());
}

double generalized_inverse(const YoungFunction& phi, double t) {
  check_finite_nonnegative(t, "generalized_inverse");
  if (std::isinf(t)) return kInfinity;
  if (!phi.domain_cap()) {
    if (const auto* f = std::get_if<family::Power>(&phi.family())) return std::pow(t, 1.0 / f->p);
    if (std::holds_alternative<family::Linear>(phi.family())) return t;
    if (std::holds_alternative<family::ExpMinusOne>(phi.family())) return std::log1p(t);
  }
  return monotone_generalized_inverse([&](double s) { return eval_young(phi, s); }, t);
}

double complementary_inverse(const YoungFunction& phi, double t) {
  check_finite_nonnegative(t, "complementary_inverse");
  return monotone_generalized_inverse([&](double s) { return complementary(phi, s); }, t);
}

YoungFunction power_compose(const YoungFunction& phi, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw ArgumentError("power_compose: q must be a positive real");
  return YoungFunction(family::PowerComposed{std::make_shared<const YoungFunction>(phi), q});
}

std::vector<double> default_young_grid() { return log_grid(1e-6, 1e6, 200); }

YoungValidity validate_young(const YoungFunction& phi, const std::vector<double>& grid) {
  if (grid.empty()) throw ArgumentError("validate_young: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw ArgumentError("validate_young: grid must be positive and strictly increasing");
    }
  }
  YoungValidity out;
  std::vector<double> xs{0.0};
  std::vector<double> vs{eval_young(phi, 0.0)};
  for (double t : grid) {
    xs.push_back(t);
    vs.push_back(eval_young(phi, t));
  }
  auto fail = [](ConditionCheck& c, double where) {
    if (c.ok) {
      c.ok = false;
      c.first_violation = where;
    }
  };
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(vs[i] > 0.0)) fail(out.positivity, xs[i]);
    if (vs[i] < vs[i - 1]) fail(out.monotonicity, xs[i]);
  }
  // Slopes of consecutive chords must not decrease; +inf values end the check.
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (std::isinf(vs[i + 1])) break;
    const double s0 = (vs[i] - vs[i - 1]) / (xs[i] - xs[i - 1]);
    const double s1 = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]);
    const double tol = 1e-9 * std::max(std::abs(s0), std::abs(s1)) + 1e-300;
    if (s1 < s0 - tol) {
      fail(out.convexity, xs[i]);
      break;
    }
  }
  if (vs[0] != 0.0) {
    fail(out.vanishing_at_zero, 0.0);
  } else {
    double eps = grid.front();
    double prev = vs[1];
    for (int k = 1; k <= 60; ++k) {
      eps *= 0.5;
      const double v = eval_young(phi, eps);
      if (v > prev) {
        fail(out.vanishing_at_zero, eps);
        break;
      }
      prev = v;
    }
    if (out.vanishing_at_zero.ok && prev > 1e-9 * std::max(1.0, vs[1])) fail(out.vanishing_at_zero, eps);
  }
  return out;
}

std::vector<double> default_nabla2_candidates() { return {1.5, 2.0, 4.0, 8.0, 16.0}; }

namespace {

bool nabla2_inequality_holds(const YoungFunction& phi, double k, const std::vector<double>& pts,
                             std::optional<double>* first_violation) {
  for (double t : pts) {
    const double lhs = eval_young(phi, t);
    const double rhs = eval_young(phi, k * t) / (2.0 * k);
    if (!(lhs <= rhs * (1.0 + 1e-12))) {
      if (first_violation) *first_violation = t;
      return false;
    }
  }
  return true;
}

std::vector<double> regime_points(const std::vector<double>& grid, double floor) {
  std::vector<double> pts;
  for (double t : grid) {
    if (t >= floor) pts.push_back(t);
  }
  return pts;
}

// max over i < j of (Phi(t_i)/t_i^gamma) / (Phi(t_j)/t_j^gamma), as a log
double max_log_ratio(const std::vector<double>& log_t, const std::vector<double>& log_phi, double gamma) {
  double running = -kInfinity;
  double worst = 0.0;
  for (std::size_t j = 0; j < log_t.size(); ++j) {
    const double g = log_phi[j] - gamma * log_t[j];
    if (j > 0) worst = std::max(worst, running - g);
    running = std::max(running, g);
  }
  return worst;
}

ExponentEstimate exponent_scan(const YoungFunction& phi, const std::vector<double>& grid,
                               const ExponentOptions& options) {
  std::vector<double> log_t, log_phi;
  for (double t : grid) {
    if (t < options.regime_floor) continue;
    const double v = eval_young(phi, t);
    if (!std::isfinite(v) || !(v > 0.0)) continue;
    log_t.push_back(std::log(t));
    log_phi.push_back(std::log(v));
  }
  if (log_t.size() < 2) throw ArgumentError("estimate_nabla2_exponent: fewer than two usable grid points");
  const double budget = std::log(options.constant_budget) + 1e-12;
  auto feasible = [&](double g) { return max_log_ratio(log_t, log_phi, g) <= budget; };
  double lo = 1.0;
  if (!feasible(lo)) return {lo, std::exp(max_log_ratio(log_t, log_phi, lo))};
  double hi = 2.0;
  while (feasible(hi) && hi < 1e6) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, std::exp(max_log_ratio(log_t, log_phi, lo))};
}

}  // namespace

Nabla2Report check_nabla2(const YoungFunction& phi, const std::vector<double>& k_candidates,
                          const std::vector<double>& grid, const Nabla2Options& options) {
  for (double k : k_candidates) {
    if (!(k > 1.0)) throw ArgumentError("check_nabla2: candidates must exceed 1");
  }
  Nabla2Report report;
  report.test_grid = regime_points(grid, options.regime_floor);
  if (report.test_grid.empty()) throw ArgumentError("check_nabla2: no grid point at or above the regime floor");
  for (double k : k_candidates) {
    if (nabla2_inequality_holds(phi, k, report.test_grid, &report.first_violation)) {
      report.holds = true;
      report.witness_k = k;
      report.first_violation.reset();
      report.holds_on_full_grid = nabla2_inequality_holds(phi, k, grid, nullptr);
      const auto est = exponent_scan(phi, grid, ExponentOptions{options.regime_floor, 1.0});
      report.gamma = est.gamma;
      report.gamma_constant = est.constant;
      break;
    }
  }
  return report;
}

ExponentEstimate estimate_nabla2_exponent(const YoungFunction& phi, const std::vector<double>& grid,
                                          const ExponentOptions& options) {
  const auto nabla = check_nabla2(phi, default_nabla2_candidates(), default_young_grid(),
                                  Nabla2Options{options.regime_floor});
  if (!nabla.holds) throw PreconditionError("estimate_nabla2_exponent: " + phi.describe() + " fails the nabla_2 check");
  return exponent_scan(phi, grid, options);
}

ONeilReport check_oneil(const YoungFunction& phi, const std::vector<double>& grid, double slack) {
  if (!validate_young(phi, grid).passed()) {
    throw PreconditionError("check_oneil: " + phi.describe() + " is not a Young function on the grid");
  }
  ONeilReport report;
  report.min_ratio = kInfinity;
  report.max_ratio = -kInfinity;
  for (double t : grid) {
    ONeilPoint pt{t, generalized_inverse(phi, t), complementary_inverse(phi, t), 0.0};
    const double product = pt.inverse * pt.complementary_inverse;
    pt.ratio = product / t;
    if (!(product >= t - slack && product <= 2.0 * t + slack)) report.holds = false;
    if (pt.ratio < report.min_ratio) {
      report.min_ratio = pt.ratio;
      report.min_ratio_at = t;
    }
    if (pt.ratio > report.max_ratio) {
      report.max_ratio = pt.ratio;
      report.max_ratio_at = t;
    }
    report.points.push_back(pt);
  }
  return report;
}

PowerEquivalence check_power_equivalence(const std::function<double(double)>& g, double p, double a,
                                         double b, std::size_t points) {
  if (!(p > 0.0)) throw ArgumentError("check_power_equivalence: p must be positive");
  if (!(a >= 1.0)) throw ArgumentError("check_power_equivalence: interval must lie in [1, inf)");
  if (!(b > a)) throw ArgumentError("check_power_equivalence: need a < b");
  PowerEquivalence out{kInfinity, 0.0, false};
  for (double t : log_grid(a, b, points)) {
    const double v = g(t);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "check_power_equivalence: g(" << t << ") is not finite";
      throw EvaluationError(os.str());
    }
    const double ratio = v / std::pow(t, p);
    out.c1 = std::min(out.c1, ratio);
    out.c2 = std::max(out.c2, ratio);
  }
  out.holds = out.c1 > 0.0 && std::isfinite(out.c2);
  return out;
}

}  // namespace orlicz
