#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orlicz/measure.hpp"
#include "orlicz/norm.hpp"
#include "orlicz/tau.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class FamilyKind { blocks, random, dyadic };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

struct FamilyOptions {
  FamilyKind kind = FamilyKind::blocks;
  /// Blocks {n, ..., m - 1} with n < m <= n_max.
  std::int64_t n_max = 1000;
  std::uint64_t seed = 42;
  bool include_zero = false;
  std::size_t draws = 500;
  std::size_t max_cardinality = 50;
  std::int64_t max_element = 200;
};

struct SetFamily {
  std::string description;
  std::vector<MeasurableSet> sets;
};

/// Blocks {n, ..., m - 1} for first <= n < m <= n_max.
SetFamily blocks_family(std::int64_t n_max, bool include_zero = false);
/// Seeded random finite subsets of {first, ..., max_element}.
SetFamily random_family(std::uint64_t seed, std::size_t draws, std::size_t max_cardinality,
                        std::int64_t max_element, bool include_zero = false);
/// [j 2^l, (j + 1) 2^l) for l in [-6, 6], j in [-8, 8).
SetFamily dyadic_family();
/// The family requested by `options`, fitted to the map's codomain.
SetFamily make_family(const TauMap& tau, const FamilyOptions& options);

/// Uniform draw from {0, ..., bound - 1} by rejection on the raw 64-bit
/// output, so the sequence is the same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct SetMargin {
  std::size_t set_id;
  double mu;           // mu(E)
  double nu_preimage;  // nu(tau^{-1}(E))
  double rhs;          // 1 / Phi(1 / (d mu(E)^{1/p}))
  double ratio;        // nu_preimage / rhs
  double d_min;        // smallest admissible d for this set (certify only)
};

struct CertificationReport {
  bool passed = false;
  double min_D_estimate = 1.0;
  /// d at which the margins were evaluated.
  double d = 1.0;
  std::optional<MeasurableSet> witness_set;
  std::size_t witness_id = 0;
  std::string family_description;
  std::vector<SetMargin> per_set_margins;
  std::size_t violations = 0;
  /// log2 of the ratio between the largest d_E over sets of scale <= S and
  /// over sets of scale <= S / 2 (certify only).
  double growth_exponent = 0.0;
};

struct CertifyOptions {
  /// Exponent q for which phi((.)^{1/q}) must be a Young function.
  double q = 1.0;
  /// 0 picks ORLICZ_KIT_THREADS or the hardware concurrency.
  std::size_t threads = 0;
  /// Largest growth exponent still read as "bounded".
  double growth_tolerance = 0.05;
};

/// Number of worker threads honoring ORLICZ_KIT_THREADS.
std::size_t worker_threads(std::size_t requested = 0);

/// nu(tau^{-1}(E)) <= 1 / Phi(1 / (d mu(E)^{1/p})) for every E of the family.
CertificationReport check_volume_condition(const TauMap& tau, const YoungFunction& phi, double p, double d,
                                           const SetFamily& family, const CertifyOptions& options = {});

/// Per-set minimal d by log-space bisection on [1, 2^64]; min_D_estimate is
/// the maximum. Passes when the maximum is finite and does not grow with the
/// scale of the sets.
CertificationReport certify_min_D(const TauMap& tau, const YoungFunction& phi, double p, const SetFamily& family,
                                  const CertifyOptions& options = {});

/// Singleton ratio nu(tau^{-1}({n})) / rhs at the given d.
double singleton_ratio(const TauMap& tau, const YoungFunction& phi, double p, double d, std::int64_t n);

struct ModularBoundReport {
  double modular;       // int Phi(|C_tau f|) d nu
  double bound;         // 2 d ||f||_{p,1}
  double lorentz_p1;
  double lorentz_pinf;
  bool holds;
};

/// Checks int Phi(|C_tau f|) d nu <= 2 d ||f||_{p,1} for a function normalized by
/// ||f||_{p,inf} <= 1 / (2d). PreconditionError when the normalization or
/// the volume condition on the superlevel sets of f fails.
ModularBoundReport modular_bound_check(const TauMap& tau, const YoungFunction& phi, double p, double d,
                                       const FunctionSpec& f, const QuadratureSettings& settings = {},
                                       double slack = 1e-6);

/// f scaled so that ||f||_{p,inf} = 1 / (2d). Simple or Indicator only.
FunctionSpec normalize_for_bound(const FunctionSpec& f, const MeasureSpace& space, double p, double d);

struct SharpnessReport {
  double nu_preimage;
  double engine_norm;   // ||chi_{tau^{-1}(E)}||_Phi from the Luxemburg engine
  double closed_form;   // 1 / Phi^{-1}(1 / nu(tau^{-1}(E)))
  double gap;
  double lorentz_norm;  // ||chi_E||_{p,1} = mu(E)^{1/p}
  double ratio;         // engine_norm / lorentz_norm
};

SharpnessReport indicator_sharpness_check(const TauMap& tau, const YoungFunction& phi, double p,
                                          const MeasurableSet& e, const QuadratureSettings& settings = {});

enum class CounterexampleKind { ex1, ex2_3 };

struct LadderPoint {
  double radius;
  double truncated_value;
};

struct CounterexampleReport {
  CounterexampleKind kind;
  double p;
  double q;
  /// ||f||_{p,1} for ex1, ||f||_{l^p} for ex2_3.
  double finite_norm;
  ValueStatus finite_norm_status;
  std::vector<LadderPoint> ladder;
  bool strictly_increasing;
  /// Least-squares slope of the truncated values against log R.
  double log_slope;
  /// ex1: status of the full L^p modular; ex2_3: pointwise lower bound verified on a grid.
  ValueStatus full_modular_status = ValueStatus::finite;
  bool lower_bound_verified = true;
  bool diverges;
};

std::vector<double> default_radius_ladder();

CounterexampleReport counterexample_suite(CounterexampleKind kind, double p, double q = 1.0,
                                          const std::vector<double>& radii = default_radius_ladder());

struct HolderPoint {
  double h;
  double quantity;  // h^{-1} / Phi(1 / (d h))
  double ratio;     // quantity / h^{gamma - 1}
};

struct HolderReport {
  double constant;  // max ratio over the grid
  bool bounded;
  bool decreasing;
  double final_quantity;
  std::vector<HolderPoint> points;
};

/// h = 2^-1, ..., 2^-20.
std::vector<double> default_h_grid();

/// Throws PreconditionError when phi fails the nabla_2 check.
HolderReport holder_bound_check(const YoungFunction& phi, double d, double gamma, const std::vector<double>& h_grid);

struct ObstructionPoint {
  int k;
  double epsilon;
  /// Value of |x|^{-gamma} on the sphere |x| = epsilon: every point of the
  /// ball B(0, epsilon) has at least this value, so the essential supremum
  /// over the ball is at least this.
  double witness;
  double essential_sup;
};

struct ObstructionReport {
  double lp_norm;
  double lp_norm_closed_form;
  double lp_gap;
  std::vector<ObstructionPoint> ladder;
  bool diverges;
};

/// f = |x|^{-gamma} on B(0, 1), tau = identity, a = 0. PreconditionError when
/// gamma >= 1 / p.
ObstructionReport continuity_obstruction_demo(double p, double gamma, int k_max = 30);

}  // namespace orlicz
