#include "orlicz/norm.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

constexpr std::int64_t kCountingPartialTerms = 65536;
constexpr double kLuxemburgRelTol = 1e-10;
constexpr std::size_t kSupGridPoints = 4096;

NormResult from_value(double value, double tolerance, std::optional<double> truncation = std::nullopt) {
  NormResult r;
  r.value = value;
  r.tolerance = tolerance;
  r.truncation = truncation;
  if (std::isinf(value)) {
    r.status = ValueStatus::infinite;
  } else if (value == 0.0) {
    r.status = ValueStatus::zero;
  } else {
    r.status = ValueStatus::finite;
  }
  return r;
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ArgumentError("modular: lambda must be positive and finite");
}

// Summation of Phi(f(n) / lambda) over Z for the decaying family, with the
// tail beyond the partial sum bracketed by the integrals from N and N + 1.
NormResult counting_power_log_modular(const YoungFunction& phi, const fn::PowerLogDecay& g, double lambda,
                                      const QuadratureSettings& settings) {
  const FunctionSpec f(g);
  auto term = [&](double x) { return eval_young(phi, f(x) / lambda); };
  double partial = term(0.0);
  for (std::int64_t n = 1; n <= kCountingPartialTerms; ++n) {
    partial += 2.0 * term(static_cast<double>(n));
    if (std::isinf(partial)) return from_value(kInfinity, 0.0);
  }
  const double big_n = static_cast<double>(kCountingPartialTerms);
  const auto tail = [&](double from) {
    return integrate_dlog([&](double x) { return x * term(x); }, {}, from, kInfinity, settings);
  };
  const auto upper = tail(big_n);
  if (upper.status == ValueStatus::infinite) return from_value(kInfinity, 0.0, upper.truncation);
  const auto lower = tail(big_n + 1.0);
  const double value = partial + (upper.value + lower.value);
  const double spread = upper.value - lower.value;
  return from_value(value, std::abs(spread) + upper.error_estimate + lower.error_estimate);
}

double mu_at(const MeasureSpace& space, const FunctionSpec& f, double t) { return distribution(space, f, t); }

}  // namespace

double modular_direct(const YoungFunction& phi, const FunctionSpec& f, double lambda, const MeasureSpace& space) {
  require_lambda(lambda);
  check_function_space(space, f);
  auto weighted = [&](double value, double measure) {
    if (measure == 0.0) return 0.0;
    return eval_young(phi, std::abs(value) / lambda) * measure;
  };
  if (const auto* s = std::get_if<fn::Simple>(&f.variant())) {
    double total = 0.0;
    for (const auto& piece : s->pieces) total += weighted(piece.value, measure_of(space, piece.set));
    return total;
  }
  if (const auto* ind = std::get_if<fn::Indicator>(&f.variant())) return weighted(1.0, measure_of(space, ind->set));
  if (const auto* g = std::get_if<fn::PowerLogDecay>(&f.variant())) {
    if (space.kind == SpaceKind::counting_finite) {
      double total = 0.0;
      for (std::int64_t n = 1; n <= space.size; ++n) total += eval_young(phi, f(static_cast<double>(n)) / lambda);
      return total;
    }
    if (space.kind == SpaceKind::counting_integers) return counting_power_log_modular(phi, *g, lambda, {}).value;
  }
  throw ArgumentError("modular_direct: no pointwise route for " + f.describe() + " on " + space.describe());
}

NormResult layer_cake_integral(const YoungFunction& phi, const FunctionSpec& f, double lambda,
                               const MeasureSpace& space, const QuadratureSettings& settings) {
  require_lambda(lambda);
  check_function_space(space, f);
  std::vector<double> knots = distribution_breakpoints(space, f);
  for (double& k : knots) k /= lambda;
  if (const auto cap = phi.domain_cap()) knots.push_back(*cap);
  const auto h = [&](double t) {
    const double mu = mu_at(space, f, lambda * t);
    if (mu == 0.0) return 0.0;
    return t * left_derivative(phi, t) * mu;
  };
  const auto q = integrate_dlog(h, knots, 0.0, kInfinity, settings);
  return from_value(q.value, q.error_estimate, q.truncation);
}

NormResult modular(const YoungFunction& phi, const FunctionSpec& f, double lambda, const MeasureSpace& space,
                   const QuadratureSettings& settings) {
  require_lambda(lambda);
  check_function_space(space, f);
  if (space.is_counting()) {
    if (const auto* g = std::get_if<fn::PowerLogDecay>(&f.variant());
        g != nullptr && space.kind == SpaceKind::counting_integers) {
      return counting_power_log_modular(phi, *g, lambda, settings);
    }
    return from_value(modular_direct(phi, f, lambda, space), 0.0);
  }
  return layer_cake_integral(phi, f, lambda, space, settings);
}

NormResult luxemburg_norm(const YoungFunction& phi, const FunctionSpec& f, const MeasureSpace& space,
                          const QuadratureSettings& settings) {
  check_function_space(space, f);
  if (essential_sup(space, f) == 0.0 || distribution(space, f, 0.0) == 0.0) return from_value(0.0, 0.0);
  auto m = [&](double lambda) { return modular(phi, f, lambda, space, settings).value; };
  double lo = 1.0;
  double hi = 1.0;
  if (m(1.0) <= 1.0) {
    int steps = 0;
    while (m(lo) <= 1.0) {
      hi = lo;
      lo *= 0.25;
      if (++steps > 60) return from_value(0.0, 0.0);
    }
  } else {
    int steps = 0;
    while (!(m(hi) <= 1.0)) {
      lo = hi;
      hi *= 4.0;
      if (++steps > 60) return from_value(kInfinity, 0.0, hi);
    }
  }
  while (hi / lo - 1.0 > kLuxemburgRelTol) {
    const double mid = std::sqrt(lo * hi);
    if (m(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return from_value(hi, (hi - lo) + settings.relative_tolerance * hi);
}

NormResult lorentz_quasinorm(double p, double q, const FunctionSpec& f, const MeasureSpace& space,
                             const QuadratureSettings& settings) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ArgumentError("lorentz: p must be positive and finite");
  if (!(q > 0.0) || std::isnan(q)) throw ArgumentError("lorentz: q must be positive or inf");
  check_function_space(space, f);
  std::vector<double> knots = distribution_breakpoints(space, f);
  if (knots.empty() || distribution(space, f, 0.0) == 0.0) return from_value(0.0, 0.0);

  if (std::isfinite(q)) {
    const auto h = [&](double t) {
      const double mu = mu_at(space, f, t);
      if (mu == 0.0) return 0.0;
      return std::pow(t * std::pow(mu, 1.0 / p), q);
    };
    const auto r = integrate_dlog(h, knots, 0.0, kInfinity, settings);
    if (r.status == ValueStatus::infinite) return from_value(kInfinity, 0.0, r.truncation);
    const double value = std::pow(r.value, 1.0 / q);
    return from_value(value, value * (r.error_estimate / std::max(r.value, 1e-300)) / q, r.truncation);
  }

  const auto g = [&](double t) {
    const double mu = mu_at(space, f, t);
    if (mu == 0.0) return 0.0;
    return t * std::pow(mu, 1.0 / p);
  };
  double best = 0.0;
  for (double k : knots) {
    const double below = std::nextafter(k, 0.0);
    const double mu = mu_at(space, f, below);
    if (mu > 0.0) best = std::max(best, k * std::pow(mu, 1.0 / p));
  }
  const double sup = essential_sup(space, f);
  const double lo = knots.front() * 1e-8;
  const double hi = std::isfinite(sup) ? std::max(sup, knots.back()) : knots.back() * 1e12;
  const auto grid = log_grid(lo, hi, kSupGridPoints);
  std::size_t best_i = 0;
  double grid_best = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = g(grid[i]);
    if (std::isinf(v)) return from_value(kInfinity, 0.0, grid[i]);
    if (v > grid_best) {
      grid_best = v;
      best_i = i;
    }
  }
  const double a = grid[best_i == 0 ? 0 : best_i - 1];
  const double b = grid[std::min(best_i + 1, grid.size() - 1)];
  const auto refined = golden_section_max(g, a, b);
  best = std::max({best, grid_best, refined.second});
  return from_value(best, settings.relative_tolerance * best);
}

double indicator_luxemburg_closed_form(const YoungFunction& phi, double measure) {
  if (measure == 0.0) return 0.0;
  return 1.0 / generalized_inverse(phi, 1.0 / measure);
}

double indicator_lorentz_closed_form(double p, double q, double measure) {
  const double factor = std::isinf(q) ? 1.0 : std::pow(q, -1.0 / q);
  return factor * std::pow(measure, 1.0 / p);
}

LayerCakeCheck layer_cake_check(const YoungFunction& phi, const FunctionSpec& f, const MeasureSpace& space,
                                const QuadratureSettings& settings) {
  const double lhs = modular_direct(phi, f, 1.0, space);
  const double rhs = layer_cake_integral(phi, f, 1.0, space, settings).value;
  if (std::isinf(lhs) != std::isinf(rhs)) {
    throw InconsistencyError("layer cake: one side is infinite while the other is finite");
  }
  return {lhs, rhs, relative_gap(lhs, rhs)};
}

ScalingIdentityReport scaling_identity_check(double p, double q, const YoungFunction& phi, const FunctionSpec& f,
                                             const MeasureSpace& space, const QuadratureSettings& settings,
                                             double tolerance) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(q)) throw ArgumentError("scaling identity: need p, q > 0 finite");
  const FunctionSpec fq = abs_power(f, q);
  ScalingIdentityReport r{};
  r.lorentz_norm = lorentz_quasinorm(p, q, f, space, settings).value;
  r.lorentz_via_power = std::pow(lorentz_quasinorm(p / q, 1.0, fq, space, settings).value, 1.0 / q);
  r.lorentz_gap = relative_gap(r.lorentz_norm, r.lorentz_via_power);
  r.lorentz_gap_normalized = relative_gap(r.lorentz_norm, r.lorentz_via_power / std::pow(q, 1.0 / q));
  r.orlicz_norm = luxemburg_norm(phi, f, space, settings).value;
  r.orlicz_via_power = std::pow(luxemburg_norm(power_compose(phi, q), fq, space, settings).value, 1.0 / q);
  r.orlicz_gap = relative_gap(r.orlicz_norm, r.orlicz_via_power);
  r.holds = r.lorentz_gap <= tolerance && r.orlicz_gap <= tolerance;
  return r;
}

double embedding_ratio(double p, double q1, double q2, const FunctionSpec& f, const MeasureSpace& space,
                       const QuadratureSettings& settings) {
  if (!(q1 <= q2)) throw ArgumentError("embedding_ratio: need q1 <= q2");
  const double den = lorentz_quasinorm(p, q1, f, space, settings).value;
  if (den == 0.0) throw DegenerateInputError("embedding_ratio: ||f||_{p,q1} vanishes");
  const double num = lorentz_quasinorm(p, q2, f, space, settings).value;
  return num / den;
}

}  // namespace orlicz
