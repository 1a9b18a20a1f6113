#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

class YoungFunction;

namespace family {

/// t^p
struct Power {
  double p;
};
/// t log(3 + t)
struct LLogL {};
/// e^t - 1
struct ExpMinusOne {};
/// t
struct Linear {};
/// t -> base(t^{1/q})
struct PowerComposed {
  std::shared_ptr<const YoungFunction> base;
  double q;
};
struct Knot {
  double t;
  double value;
};
/// Piecewise-linear interpolation of (t, value) knots; the first knot is (0, 0)
/// and the last segment is extended linearly.
struct Tabulated {
  std::vector<Knot> knots;
};

}  // namespace family

/// A nonnegative function on [0, inf) taking extended-real values, intended
/// to be a Young function. Immutable; copies share composed bases.
///
/// Construction checks the parameters of the family (p > 0, q > 0, knots
/// sorted). Convexity and positivity are not enforced here: see
/// validate_young.
class YoungFunction {
 public:
  using Family = std::variant<family::Power, family::LLogL, family::ExpMinusOne, family::Linear,
                              family::PowerComposed, family::Tabulated>;

  explicit YoungFunction(Family family, std::optional<double> domain_cap = std::nullopt);

  static YoungFunction power(double p);
  static YoungFunction llogl();
  static YoungFunction exp_minus_one();
  static YoungFunction linear();
  static YoungFunction tabulated(std::vector<family::Knot> knots);

  const Family& family() const noexcept { return family_; }
  /// Evaluation returns +inf for t strictly above the cap.
  std::optional<double> domain_cap() const noexcept { return domain_cap_; }

  /// Same as eval_young.
  double operator()(double t) const;

  std::string describe() const;

 private:
  Family family_;
  std::optional<double> domain_cap_;
};

/// Phi(t). Phi(0) = 0 exactly. Throws DomainError for negative or NaN t.
double eval_young(const YoungFunction& phi, double t);

/// Left derivative lim_{h->0+} (Phi(t) - Phi(t - h)) / h, closed form for
/// every built-in family. Throws DomainError for t <= 0.
double left_derivative(const YoungFunction& phi, double t);

/// Backward-difference left derivative with two Richardson steps, starting
/// from h = max(t 1e-6, 1e-12). Used where no closed form applies and as an
/// independent check of the closed forms.
double numeric_left_derivative(const YoungFunction& phi, double t);

/// sup{s t - Phi(s) : s >= 0}, possibly +inf.
double complementary(const YoungFunction& phi, double t);

/// The conjugate by golden-section search regardless of family.
double complementary_numeric(const YoungFunction& phi, double t);

/// inf{s >= 0 : Phi(s) > t}; +inf when no such s exists below 1e300.
double generalized_inverse(const YoungFunction& phi, double t);

/// Generalized inverse of the complementary function.
double complementary_inverse(const YoungFunction& phi, double t);

/// t -> Phi(t^{1/q}). The result is not necessarily convex.
YoungFunction power_compose(const YoungFunction& phi, double q);

struct ConditionCheck {
  bool ok = true;
  std::optional<double> first_violation;
};

struct YoungValidity {
  ConditionCheck positivity;
  ConditionCheck monotonicity;
  ConditionCheck convexity;
  ConditionCheck vanishing_at_zero;

  bool passed() const noexcept {
    return positivity.ok && monotonicity.ok && convexity.ok && vanishing_at_zero.ok;
  }
};

/// Checks positivity, monotonicity and discrete convexity on the grid, and
/// that Phi(0) = 0 with Phi(eps) decreasing to 0 along eps = grid[0] 2^-k.
/// Throws ArgumentError for an empty or unsorted grid.
YoungValidity validate_young(const YoungFunction& phi, const std::vector<double>& grid);

/// 200 points log-spaced in [1e-6, 1e6].
std::vector<double> default_young_grid();

struct Nabla2Options {
  /// The inequality is required at grid points t >= regime_floor only.
  double regime_floor = 1.0;
};

struct Nabla2Report {
  bool holds = false;
  std::optional<double> witness_k;
  std::optional<double> gamma;
  std::optional<double> gamma_constant;
  /// Grid points at which the inequality was required.
  std::vector<double> test_grid;
  /// Whether the same witness k also works on the full grid below the floor.
  bool holds_on_full_grid = false;
  /// First grid point violating Phi(t) <= Phi(k t) / (2k) for the last
  /// candidate tried, when holds is false.
  std::optional<double> first_violation;
};

std::vector<double> default_nabla2_candidates();

/// Finds the first k with Phi(t) <= Phi(k t) / (2k) on the test grid.
Nabla2Report check_nabla2(const YoungFunction& phi, const std::vector<double>& k_candidates,
                          const std::vector<double>& grid, const Nabla2Options& options = {});

struct ExponentEstimate {
  double gamma;
  double constant;
};

struct ExponentOptions {
  double regime_floor = 1.0;
  /// Largest admissible C in Phi(t)/t^gamma <= C Phi(s)/s^gamma.
  double constant_budget = 1.0;
};

/// Largest gamma (by bisection) whose max-ratio constant over grid pairs
/// t < s stays within the budget. Throws PreconditionError unless check_nabla2
/// holds with the default candidates and grid.
ExponentEstimate estimate_nabla2_exponent(const YoungFunction& phi, const std::vector<double>& grid,
                                          const ExponentOptions& options = {});

struct ONeilPoint {
  double t;
  double inverse;
  double complementary_inverse;
  double ratio;  // product / t
};

struct ONeilReport {
  bool holds = true;
  double min_ratio;
  double min_ratio_at;
  double max_ratio;
  double max_ratio_at;
  std::vector<ONeilPoint> points;
};

/// t <= Phi^{-1}(t) Phi~^{-1}(t) <= 2t with `slack` absolute tolerance.
ONeilReport check_oneil(const YoungFunction& phi, const std::vector<double>& grid,
                        double slack = 1e-8);

struct PowerEquivalence {
  double c1;
  double c2;
  bool holds;
};

/// Empirical band c1 <= g(t)/t^p <= c2 over `points` log-spaced samples of [a, b].
PowerEquivalence check_power_equivalence(const std::function<double(double)>& g, double p, double a,
                                         double b, std::size_t points = 200);

}  // namespace orlicz
