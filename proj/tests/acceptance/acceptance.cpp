// Acceptance run: one PASS/FAIL line per criterion, with runtime and budget.
// Exit status is nonzero only for failures outside kKnownFailures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "orlicz/composition.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/norm.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/report.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

// The raw Lorentz scaling identity is off by the constant q^{1/q}; see README.
const std::set<int> kKnownFailures = {9};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double rel(double a, double b) { return relative_gap(a, b); }

Outcome indicator_closed_forms() {
  const auto line = MeasureSpace::lebesgue_line();
  double worst = 0.0;
  for (double mu : {1e-3, 1.0, 4.0, 1e3}) {
    const auto f = FunctionSpec::indicator(MeasurableSet::intervals({{0, mu}}));
    for (const auto& phi : {YoungFunction::power(2), YoungFunction::llogl(), YoungFunction::exp_minus_one()}) {
      worst = std::max(worst, rel(luxemburg_norm(phi, f, line).value, indicator_luxemburg_closed_form(phi, mu)));
    }
    for (const auto& [p, q] : std::vector<std::pair<double, double>>{{2, 1}, {2, 2}, {3, kInfinity}}) {
      worst = std::max(worst, rel(lorentz_quasinorm(p, q, f, line).value, indicator_lorentz_closed_form(p, q, mu)));
    }
  }
  return {worst <= 1e-6, fmt("worst relative gap %.3g", worst)};
}

Outcome layer_cake() {
  const auto line = MeasureSpace::lebesgue_line();
  double worst = 0.0;
  for (const auto& f : simple_corpus(42, 50, line)) {
    for (const auto& phi : {YoungFunction::power(2), YoungFunction::llogl(), YoungFunction::exp_minus_one()}) {
      worst = std::max(worst, layer_cake_check(phi, f, line).relative_gap);
    }
  }
  return {worst <= 1e-6, fmt("150 pairs, worst relative gap %.3g", worst)};
}

Outcome derivative_sandwich() {
  const std::vector<YoungFunction> families = {YoungFunction::power(2),
                                               YoungFunction::power(1.5),
                                               YoungFunction::llogl(),
                                               YoungFunction::exp_minus_one(),
                                               YoungFunction::linear(),
                                               power_compose(YoungFunction::power(3), 2),
                                               YoungFunction::tabulated({{0, 0}, {1, 0.5}, {2, 2}, {4, 8}})};
  std::size_t violations = 0;
  for (const auto& phi : families) {
    for (double t : log_grid(1e-3, 1e2, 200)) {
      const double mid = left_derivative(phi, t);
      const double slack = 1e-12 * std::max(1.0, std::abs(mid));
      if (!(eval_young(phi, t) / t <= mid + slack) || !(mid <= eval_young(phi, 2 * t) / t + slack)) ++violations;
    }
  }
  return {violations == 0, fmt("%.0f families x 200 points, %.0f violations", families.size(), violations)};
}

Outcome oneil() {
  double lo = kInfinity;
  double hi = 0.0;
  bool ok = true;
  for (const auto& phi : {YoungFunction::power(2), YoungFunction::llogl(), YoungFunction::exp_minus_one()}) {
    const auto r = check_oneil(phi, log_grid(1e-3, 1e3, 100), 1e-8);
    ok = ok && r.holds;
    lo = std::min(lo, r.min_ratio);
    hi = std::max(hi, r.max_ratio);
  }
  return {ok, fmt("ratio range [%.6f, %.6f]", lo, hi)};
}

Outcome gauss_coherence() {
  const auto family = blocks_family(1000);
  bool ok = true;
  std::string detail;
  for (const auto& [p, q] : std::vector<std::pair<double, double>>{{2, 1}, {1, 1}}) {
    const auto r = certify_min_D(TauMap::gauss_power(p, q), YoungFunction::power(q), p, family);
    ok = ok && r.passed && r.min_D_estimate <= std::pow(2.0, 1.0 / q) * (1 + 1e-6);
    detail += fmt("min_D(%g,", p) + fmt("%g)=", q) + fmt("%.9g; ", r.min_D_estimate);
  }
  const auto tau = TauMap::gauss_power(1, 2);
  const auto phi = YoungFunction::power(2);
  const auto bad = certify_min_D(tau, phi, 1, family);
  const double growth = singleton_ratio(tau, phi, 1, 1, 10000) / singleton_ratio(tau, phi, 1, 1, 1);
  ok = ok && !bad.passed && growth > 100.0;
  detail += fmt("(1,2) passed=%g, singleton growth %.4g", bad.passed ? 1 : 0, growth);
  return {ok, detail};
}

Outcome modular_bound() {
  struct Setup {
    TauMap tau;
    YoungFunction phi;
    double p;
    double d;
  };
  const std::vector<Setup> setups = {
      {TauMap::identity(), YoungFunction::power(1), 1, 1},
      {TauMap::identity(), YoungFunction::power(2), 2, 1},
      {TauMap::identity(), YoungFunction::power(3), 3, 1},
      {TauMap::gauss_power(2, 1), YoungFunction::power(1), 2, 2},
      {TauMap::gauss_power(1, 1), YoungFunction::power(1), 1, 2},
      {TauMap::gauss_power(3, 2), YoungFunction::power(2), 3, 2},
  };
  std::size_t checked = 0;
  double worst_excess = -kInfinity;
  bool ok = true;
  std::uint64_t seed = 100;
  for (const auto& s : setups) {
    const auto space = s.tau.codomain();
    for (const auto& raw : simple_corpus(seed++, 20, space)) {
      const auto f = normalize_for_bound(raw, space, s.p, s.d);
      const auto r = modular_bound_check(s.tau, s.phi, s.p, s.d, f);
      ok = ok && r.modular <= r.bound + 1e-6;
      worst_excess = std::max(worst_excess, r.modular - r.bound);
      ++checked;
    }
  }
  return {ok, fmt("%.0f functions, max(modular - bound) = %.4g", checked, worst_excess)};
}

Outcome counterexamples() {
  const auto a = counterexample_suite(CounterexampleKind::ex1, 0.5);
  const auto b = counterexample_suite(CounterexampleKind::ex2_3, 2, 1);
  const bool ok_a = a.finite_norm_status == ValueStatus::finite && a.strictly_increasing && a.log_slope > 0.0 &&
                    a.full_modular_status == ValueStatus::infinite;
  const bool ok_b = b.finite_norm_status == ValueStatus::finite && b.strictly_increasing && b.log_slope > 0.0 &&
                    b.lower_bound_verified;
  return {ok_a && ok_b, fmt("||f||_{1/2,1} = %.6f, l2 norm = %.6f", a.finite_norm, b.finite_norm) +
                            fmt(", slopes %.4f / %.4f", a.log_slope, b.log_slope)};
}

Outcome nabla2() {
  const auto grid = default_young_grid();
  const auto cands = default_nabla2_candidates();
  const bool power = check_nabla2(YoungFunction::power(2), cands, grid).holds;
  const bool exp = check_nabla2(YoungFunction::exp_minus_one(), cands, grid).holds;
  const bool linear = check_nabla2(YoungFunction::linear(), cands, grid).holds;
  const bool llogl = check_nabla2(YoungFunction::llogl(), cands, grid).holds;
  double worst_final = 0.0;
  bool decreasing = true;
  for (const auto& phi : {YoungFunction::power(2), YoungFunction::exp_minus_one()}) {
    const auto h = holder_bound_check(phi, 1, 2, default_h_grid());
    decreasing = decreasing && h.decreasing;
    worst_final = std::max(worst_final, h.final_quantity);
  }
  const bool ok = power && exp && !linear && !llogl && decreasing && worst_final < 1e-3;
  return {ok, fmt("holds: Power(2)=%g ExpMinusOne=%g ", power, exp) + fmt("Linear=%g LLogL=%g, ", linear, llogl) +
                  fmt("largest final quantity %.3g", worst_final)};
}

Outcome scaling() {
  const auto line = MeasureSpace::lebesgue_line();
  double lorentz = 0.0;
  double normalized = 0.0;
  double orlicz_gap = 0.0;
  for (const auto& f : simple_corpus(7, 20, line)) {
    const auto r = scaling_identity_check(3, 2, YoungFunction::llogl(), f, line);
    lorentz = std::max(lorentz, r.lorentz_gap);
    normalized = std::max(normalized, r.lorentz_gap_normalized);
    orlicz_gap = std::max(orlicz_gap, r.orlicz_gap);
  }
  return {lorentz <= 1e-6 && orlicz_gap <= 1e-6,
          fmt("orlicz gap %.3g, lorentz gap %.6f", orlicz_gap, lorentz) +
              fmt(" (%.3g after dividing by q^{1/q})", normalized)};
}

Outcome obstruction() {
  const auto r = continuity_obstruction_demo(2, 0.25, 30);
  bool exact = r.ladder.size() == 30;
  for (const auto& pt : r.ladder) exact = exact && pt.witness == std::exp2(0.25 * pt.k);
  const bool ok = exact && r.lp_gap <= 1e-8;
  return {ok, fmt("L2 norm %.12f, gap %.3g", r.lp_norm, r.lp_gap)};
}

Outcome determinism() {
  Json doc = {{"command", "reproduce-paper"}, {"target", "all"}, {"seed", 42}};
  const auto first = run(parse_config(doc));
  setenv("ORLICZ_KIT_THREADS", "3", 1);
  const auto second = run(parse_config(doc));
  unsetenv("ORLICZ_KIT_THREADS");
  const std::string a = first.envelope.dump(2);
  const std::string b = second.envelope.dump(2);
  return {a == b && first.csv == second.csv && first.exit_code == 0,
          fmt("payload %.0f bytes, exit code %.0f", a.size(), first.exit_code)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "indicator closed forms", 1, indicator_closed_forms},
      {2, "layer-cake identity", 30, layer_cake},
      {3, "derivative sandwich", 1, derivative_sandwich},
      {4, "O'Neil inequality", 10, oneil},
      {5, "Gauss-power coherence", 10, gauss_coherence},
      {6, "modular bound", 60, modular_bound},
      {7, "counterexample divergence", 30, counterexamples},
      {8, "nabla_2 machinery", 5, nabla2},
      {9, "scaling identities", 20, scaling},
      {10, "continuity obstruction witness", 1, obstruction},
      {11, "determinism", 120, determinism},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool passed = out.passed && in_budget;
    const bool known = kKnownFailures.count(c.id) > 0;
    std::printf("%s [%2d] %-32s %7.3fs / %gs  %s%s%s\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.budget_seconds, out.detail.c_str(), in_budget ? "" : "  (over budget)",
                !passed && known ? "  (known deviation)" : "");
    if (!passed && !known) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
