#include "orlicz/composition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

constexpr double kConditionSlack = 1e-12;
constexpr double kLogDMax = 64.0 * std::numbers::ln2;
constexpr double kLogDWidth = 0.25e-6;

template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  threads = std::min(threads, std::max<std::size_t>(1, n / 1024));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = n * w / threads;
      const std::size_t end = n * (w + 1) / threads;
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

const map::OrliczInverse* find_orlicz_inverse(const TauMap& tau) {
  if (const auto* m = std::get_if<map::OrliczInverse>(&tau.variant())) return m;
  if (const auto* r = std::get_if<map::FiniteRestriction>(&tau.variant())) return find_orlicz_inverse(*r->base);
  return nullptr;
}

void check_hypotheses(const TauMap& tau, const YoungFunction& phi, double p, double d, const CertifyOptions& options) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ArgumentError("certify: p must be positive and finite");
  if (!(d >= 1.0)) throw ArgumentError("certify: d must be >= 1");
  if (!(options.q > 0.0)) throw ArgumentError("certify: q must be positive");
  if (!validate_young(power_compose(phi, options.q), default_young_grid()).passed()) {
    throw PreconditionError("certify: phi((.)^{1/q}) is not a Young function");
  }
  if (const auto* m = find_orlicz_inverse(tau)) {
    const auto g = [m](double t) { return std::pow(generalized_inverse(m->phi, 1.0 / t), -m->p); };
    if (!check_power_equivalence(g, m->p, 1.0, 1e4).holds) {
      throw PreconditionError("certify: {phi^{-1}(1/t)}^{-p} is not equivalent to t^p on (1, 1e4)");
    }
  }
}

struct SetValues {
  double mu;
  double nu;
};

SetValues evaluate_set(const TauMap& tau, const MeasureSpace& codomain, const MeasurableSet& e) {
  const double mu = measure_of(codomain, e);
  const double nu = measure_of(MeasureSpace::lebesgue_line(), tau_preimage(tau, e));
  if (mu == 0.0 && nu > 0.0) {
    throw NonsingularityError("null set " + e.describe() + " has a preimage of measure " + std::to_string(nu));
  }
  return {mu, nu};
}

double rhs_at(const YoungFunction& phi, double p, double d, double mu) {
  if (mu == 0.0) return kInfinity;
  return 1.0 / eval_young(phi, 1.0 / (d * std::pow(mu, 1.0 / p)));
}

bool admissible(const YoungFunction& phi, double p, double d, const SetValues& v) {
  return v.nu <= rhs_at(phi, p, d, v.mu) * (1.0 + kConditionSlack);
}

double minimal_d(const YoungFunction& phi, double p, const SetValues& v) {
  if (v.mu == 0.0 || v.nu == 0.0 || admissible(phi, p, 1.0, v)) return 1.0;
  if (std::isinf(v.nu) || !admissible(phi, p, std::exp(kLogDMax), v)) return kInfinity;
  double lo = 0.0;
  double hi = kLogDMax;
  while (hi - lo > kLogDWidth) {
    const double mid = 0.5 * (lo + hi);
    if (admissible(phi, p, std::exp(mid), v)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::exp(hi);
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::blocks:
      return "blocks";
    case FamilyKind::random:
      return "random";
    case FamilyKind::dyadic:
      return "dyadic";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
  if (name == "blocks") return FamilyKind::blocks;
  if (name == "random") return FamilyKind::random;
  if (name == "dyadic") return FamilyKind::dyadic;
  throw ArgumentError("unknown family '" + name + "' (expected blocks, random or dyadic)");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t raw = rng();
    if (raw < limit) return raw % bound;
  }
}

SetFamily blocks_family(std::int64_t n_max, bool include_zero) {
  const std::int64_t first = include_zero ? 0 : 1;
  if (n_max <= first) throw ArgumentError("blocks: n_max too small for a nonempty family");
  SetFamily out;
  out.description = "blocks {n..m-1}, " + std::to_string(first) + " <= n < m <= " + std::to_string(n_max);
  for (std::int64_t n = first; n < n_max; ++n) {
    for (std::int64_t m = n + 1; m <= n_max; ++m) out.sets.emplace_back(IntegerSet::range(n, m - 1));
  }
  return out;
}

SetFamily random_family(std::uint64_t seed, std::size_t draws, std::size_t max_cardinality, std::int64_t max_element,
                        bool include_zero) {
  const std::int64_t first = include_zero ? 0 : 1;
  if (max_element < first || max_cardinality == 0) throw ArgumentError("random family: empty element range");
  const auto universe = static_cast<std::uint64_t>(max_element - first + 1);
  const std::size_t cap = std::min<std::size_t>(max_cardinality, universe);
  std::mt19937_64 rng(seed);
  SetFamily out;
  out.description = "random subsets, seed " + std::to_string(seed) + ", " + std::to_string(draws) +
                    " draws, cardinality <= " + std::to_string(cap) + ", elements in [" + std::to_string(first) +
                    ", " + std::to_string(max_element) + "]";
  for (std::size_t i = 0; i < draws; ++i) {
    const std::size_t card = 1 + uniform_below(rng, cap);
    std::vector<std::int64_t> elems;
    while (elems.size() < card) {
      const auto e = first + static_cast<std::int64_t>(uniform_below(rng, universe));
      if (std::find(elems.begin(), elems.end(), e) == elems.end()) elems.push_back(e);
    }
    out.sets.emplace_back(IntegerSet(std::move(elems)));
  }
  return out;
}

SetFamily dyadic_family() {
  SetFamily out;
  out.description = "dyadic intervals [j 2^l, (j+1) 2^l), -6 <= l <= 6, -8 <= j < 8";
  for (int l = -6; l <= 6; ++l) {
    for (int j = -8; j < 8; ++j) {
      out.sets.emplace_back(IntervalUnion({{std::ldexp(j, l), std::ldexp(j + 1, l)}}));
    }
  }
  return out;
}

SetFamily make_family(const TauMap& tau, const FamilyOptions& options) {
  const auto codomain = tau.codomain();
  if (options.kind == FamilyKind::dyadic) {
    if (codomain.is_counting()) throw ArgumentError("dyadic family needs a map into the line");
    return dyadic_family();
  }
  if (!codomain.is_counting()) throw ArgumentError(to_string(options.kind) + " family needs a map into the integers");
  const bool zero = options.include_zero && codomain.kind == SpaceKind::counting_integers;
  if (options.kind == FamilyKind::blocks) {
    std::int64_t n_max = options.n_max;
    if (codomain.kind == SpaceKind::counting_finite) n_max = std::min(n_max, codomain.size + 1);
    return blocks_family(n_max, zero);
  }
  std::int64_t max_element = options.max_element;
  if (codomain.kind == SpaceKind::counting_finite) max_element = std::min(max_element, codomain.size);
  return random_family(options.seed, options.draws, options.max_cardinality, max_element, zero);
}

std::size_t worker_threads(std::size_t requested) {
  if (requested > 0) return requested;
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORLICZ_KIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) hw = std::min<std::size_t>(hw, static_cast<std::size_t>(v));
  }
  return hw;
}

CertificationReport check_volume_condition(const TauMap& tau, const YoungFunction& phi, double p, double d,
                                           const SetFamily& family, const CertifyOptions& options) {
  check_hypotheses(tau, phi, p, d, options);
  const auto codomain = tau.codomain();
  CertificationReport report;
  report.d = d;
  report.min_D_estimate = d;
  report.family_description = family.description;
  report.per_set_margins.resize(family.sets.size());
  parallel_for(family.sets.size(), worker_threads(options.threads), [&](std::size_t i) {
    const auto v = evaluate_set(tau, codomain, family.sets[i]);
    const double rhs = rhs_at(phi, p, d, v.mu);
    const double ratio = v.nu == 0.0 ? 0.0 : v.nu / rhs;
    report.per_set_margins[i] = {i, v.mu, v.nu, rhs, ratio, 0.0};
  });
  double worst = -1.0;
  for (const auto& m : report.per_set_margins) {
    if (!(m.nu_preimage <= m.rhs * (1.0 + kConditionSlack))) ++report.violations;
    if (m.ratio > worst) {
      worst = m.ratio;
      report.witness_id = m.set_id;
    }
  }
  if (!family.sets.empty()) report.witness_set = family.sets[report.witness_id];
  report.passed = report.violations == 0;
  return report;
}

CertificationReport certify_min_D(const TauMap& tau, const YoungFunction& phi, double p, const SetFamily& family,
                                  const CertifyOptions& options) {
  if (family.sets.empty()) throw ArgumentError("certify_min_D: empty family");
  check_hypotheses(tau, phi, p, 1.0, options);
  const auto codomain = tau.codomain();
  CertificationReport report;
  report.family_description = family.description;
  report.per_set_margins.resize(family.sets.size());
  parallel_for(family.sets.size(), worker_threads(options.threads), [&](std::size_t i) {
    const auto v = evaluate_set(tau, codomain, family.sets[i]);
    report.per_set_margins[i] = {i, v.mu, v.nu, 0.0, 0.0, minimal_d(phi, p, v)};
  });

  double max_d = 1.0;
  for (const auto& m : report.per_set_margins) {
    if (m.d_min > max_d) {
      max_d = m.d_min;
      report.witness_id = m.set_id;
    }
  }
  report.min_D_estimate = max_d;
  report.d = max_d;
  report.witness_set = family.sets[report.witness_id];
  for (auto& m : report.per_set_margins) {
    m.rhs = rhs_at(phi, p, max_d, m.mu);
    m.ratio = m.nu_preimage == 0.0 ? 0.0 : m.nu_preimage / m.rhs;
    if (!(m.nu_preimage <= m.rhs * (1.0 + kConditionSlack))) ++report.violations;
  }

  double scale_max = 0.0;
  for (const auto& s : family.sets) scale_max = std::max(scale_max, s.scale());
  double half_max = 0.0;
  bool has_half = false;
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    if (family.sets[i].scale() <= 0.5 * scale_max) {
      has_half = true;
      half_max = std::max(half_max, report.per_set_margins[i].d_min);
    }
  }
  if (std::isinf(max_d)) {
    report.growth_exponent = kInfinity;
  } else if (has_half && half_max > 0.0) {
    report.growth_exponent = std::log2(max_d / half_max);
  }
  report.passed = std::isfinite(max_d) && report.growth_exponent <= options.growth_tolerance;
  return report;
}

double singleton_ratio(const TauMap& tau, const YoungFunction& phi, double p, double d, std::int64_t n) {
  const auto v = evaluate_set(tau, tau.codomain(), IntegerSet::range(n, n));
  return v.nu / rhs_at(phi, p, d, v.mu);
}

FunctionSpec normalize_for_bound(const FunctionSpec& f, const MeasureSpace& space, double p, double d) {
  const double weak = lorentz_quasinorm(p, kInfinity, f, space).value;
  if (weak == 0.0) return f;
  return scale_function(f, 1.0 / (2.0 * d * weak));
}

ModularBoundReport modular_bound_check(const TauMap& tau, const YoungFunction& phi, double p, double d,
                                       const FunctionSpec& f, const QuadratureSettings& settings, double slack) {
  const auto codomain = tau.codomain();
  check_function_space(codomain, f);
  ModularBoundReport r{};
  r.lorentz_pinf = lorentz_quasinorm(p, kInfinity, f, codomain, settings).value;
  if (r.lorentz_pinf > (1.0 + 1e-9) / (2.0 * d)) {
    throw PreconditionError("modular bound: ||f||_{p,inf} exceeds 1/(2d); rescale f");
  }
  r.lorentz_p1 = lorentz_quasinorm(p, 1.0, f, codomain, settings).value;
  r.bound = 2.0 * d * r.lorentz_p1;
  if (r.lorentz_pinf == 0.0) {
    r.modular = 0.0;
    r.holds = true;
    return r;
  }
  SetFamily levels;
  levels.description = "superlevel sets of f";
  for (double k : distribution_breakpoints(codomain, f)) {
    auto s = superlevel_set(codomain, f, k * (1.0 - 1e-12));
    if (!s.empty()) levels.sets.push_back(std::move(s));
  }
  CertifyOptions single;
  single.threads = 1;
  if (!check_volume_condition(tau, phi, p, d, levels, single).passed) {
    throw PreconditionError("modular bound: the volume condition fails on a superlevel set of f");
  }
  r.modular = modular(phi, FunctionSpec::composed(tau, f), 1.0, MeasureSpace::lebesgue_line(), settings).value;
  r.holds = r.modular <= r.bound + slack;
  return r;
}

SharpnessReport indicator_sharpness_check(const TauMap& tau, const YoungFunction& phi, double p,
                                          const MeasurableSet& e, const QuadratureSettings& settings) {
  const auto codomain = tau.codomain();
  const auto pre = tau_preimage(tau, e);
  SharpnessReport r{};
  r.nu_preimage = measure_of(MeasureSpace::lebesgue_line(), pre);
  r.engine_norm = luxemburg_norm(phi, FunctionSpec::indicator(pre), MeasureSpace::lebesgue_line(), settings).value;
  r.closed_form = indicator_luxemburg_closed_form(phi, r.nu_preimage);
  r.gap = relative_gap(r.engine_norm, r.closed_form);
  r.lorentz_norm = indicator_lorentz_closed_form(p, 1.0, measure_of(codomain, e));
  r.ratio = r.lorentz_norm == 0.0 ? 0.0 : r.engine_norm / r.lorentz_norm;
  return r;
}

std::vector<double> default_radius_ladder() { return {1e3, 1e4, 1e5, 1e6}; }

namespace {

// int_0^R (1 + x)^{-1} (log(3 + x))^{-1} dx
double log_log_integral(double radius) {
  QuadratureSettings s;
  s.relative_tolerance = 1e-11;
  const auto r = integrate_dlog([](double x) { return x / ((1.0 + x) * std::log(3.0 + x)); }, {}, 0.0, radius, s);
  return r.value;
}

}  // namespace

CounterexampleReport counterexample_suite(CounterexampleKind kind, double p, double q, const std::vector<double>& radii) {
  if (radii.size() < 2) throw ArgumentError("counterexample: the radius ladder needs at least two points");
  CounterexampleReport r{};
  r.kind = kind;
  r.p = p;
  r.q = q;
  if (kind == CounterexampleKind::ex1) {
    if (!(p > 0.0 && p < 1.0)) throw PreconditionError("ex1 needs 0 < p < 1");
    const auto f = FunctionSpec::power_log_decay(p, p);
    const auto line = MeasureSpace::lebesgue_line();
    const auto lorentz = lorentz_quasinorm(p, 1.0, f, line);
    r.finite_norm = lorentz.value;
    r.finite_norm_status = lorentz.status;
    r.full_modular_status = modular(YoungFunction::power(p), f, 1.0, line).status;
    for (double radius : radii) r.ladder.push_back({radius, 2.0 * log_log_integral(radius)});
  } else {
    if (!(q > 0.0 && q < p && std::isfinite(p))) throw PreconditionError("ex2_3 needs 0 < q < p < inf");
    const auto f = FunctionSpec::power_log_decay(p, q);
    const auto lp = modular(YoungFunction::power(p), f, 1.0, MeasureSpace::counting_integers());
    r.finite_norm = std::pow(lp.value, 1.0 / p);
    r.finite_norm_status = lp.status;
    const auto tau = TauMap::gauss_power(p, q);
    for (double y : log_grid(1e-3, 1e6, 400)) {
      const double actual = std::pow(f(tau(y)), q);
      const double bound = (q / p) / ((1.0 + y) * std::log(3.0 + y));
      if (actual < bound * (1.0 - 1e-12)) r.lower_bound_verified = false;
    }
    for (double radius : radii) r.ladder.push_back({radius, 2.0 * (q / p) * log_log_integral(radius)});
  }
  r.strictly_increasing = true;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < r.ladder.size(); ++i) {
    if (i > 0 && !(r.ladder[i].truncated_value > r.ladder[i - 1].truncated_value)) r.strictly_increasing = false;
    xs.push_back(std::log(r.ladder[i].radius));
    ys.push_back(r.ladder[i].truncated_value);
  }
  r.log_slope = fitted_slope(xs, ys);
  r.diverges = r.finite_norm_status == ValueStatus::finite && r.strictly_increasing && r.log_slope > 0.0 &&
               r.lower_bound_verified &&
               (kind != CounterexampleKind::ex1 || r.full_modular_status == ValueStatus::infinite);
  return r;
}

std::vector<double> default_h_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 20; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

HolderReport holder_bound_check(const YoungFunction& phi, double d, double gamma, const std::vector<double>& h_grid) {
  if (!(d >= 1.0)) throw ArgumentError("holder bound: d must be >= 1");
  if (!(gamma > 1.0)) throw ArgumentError("holder bound: gamma must exceed 1");
  if (h_grid.empty()) throw ArgumentError("holder bound: empty h grid");
  if (!check_nabla2(phi, default_nabla2_candidates(), default_young_grid()).holds) {
    throw PreconditionError("holder bound: phi does not satisfy the nabla_2 condition");
  }
  HolderReport r{};
  r.constant = 0.0;
  r.decreasing = true;
  for (double h : h_grid) {
    if (!(h > 0.0 && h < 1.0)) throw ArgumentError("holder bound: h must lie in (0, 1)");
    const double quantity = 1.0 / (h * eval_young(phi, 1.0 / (d * h)));
    const double ratio = quantity / std::pow(h, gamma - 1.0);
    if (!r.points.empty()) {
      const double prev = r.points.back().quantity;
      if (!(quantity < prev || (quantity == 0.0 && prev == 0.0))) r.decreasing = false;
    }
    r.points.push_back({h, quantity, ratio});
    r.constant = std::max(r.constant, ratio);
  }
  r.bounded = std::isfinite(r.constant);
  r.final_quantity = r.points.back().quantity;
  return r;
}

ObstructionReport continuity_obstruction_demo(double p, double gamma, int k_max) {
  if (!(p > 0.0) || !(gamma > 0.0)) throw ArgumentError("obstruction demo: p and gamma must be positive");
  if (!(gamma * p < 1.0)) throw PreconditionError("obstruction demo: gamma must be < 1/p for f to lie in L^p");
  if (k_max < 1) throw ArgumentError("obstruction demo: k_max must be >= 1");
  const auto f = FunctionSpec::radial_power(gamma, 1.0);
  QuadratureSettings tight;
  tight.relative_tolerance = 1e-13;
  tight.absolute_floor = 1e-300;
  ObstructionReport r{};
  const double m = modular(YoungFunction::power(p), f, 1.0, MeasureSpace::lebesgue_line(), tight).value;
  r.lp_norm = std::pow(m, 1.0 / p);
  r.lp_norm_closed_form = std::pow(2.0 / (1.0 - gamma * p), 1.0 / p);
  r.lp_gap = relative_gap(r.lp_norm, r.lp_norm_closed_form);
  r.diverges = true;
  for (int k = 1; k <= k_max; ++k) {
    const double eps = std::ldexp(1.0, -k);
    ObstructionPoint pt{k, eps, f(eps), essential_sup(MeasureSpace::lebesgue_line(), f)};
    if (!r.ladder.empty() && !(pt.witness > r.ladder.back().witness)) r.diverges = false;
    r.ladder.push_back(pt);
  }
  return r;
}

}  // namespace orlicz
