#pragma once

#include <optional>

#include "orlicz/measure.hpp"
#include "orlicz/quadrature.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct NormResult {
  double value = 0.0;
  ValueStatus status = ValueStatus::zero;
  double tolerance = 0.0;
  std::optional<double> truncation;
};

/// int Phi(|f| / lambda) d mu. Counting spaces are summed directly (with
/// integral tail bounds for infinite supports); the line goes through the
/// layer-cake integral. Throws ArgumentError for lambda <= 0.
NormResult modular(const YoungFunction& phi, const FunctionSpec& f, double lambda, const MeasureSpace& space,
                   const QuadratureSettings& settings = {});

/// int_0^inf phi(t) mu_{f/lambda}(t) dt with phi the left derivative of Phi.
NormResult layer_cake_integral(const YoungFunction& phi, const FunctionSpec& f, double lambda,
                               const MeasureSpace& space, const QuadratureSettings& settings = {});

/// The modular summed over the pieces of a Simple or Indicator function, or
/// over the points of a counting space. ArgumentError for other inputs.
double modular_direct(const YoungFunction& phi, const FunctionSpec& f, double lambda, const MeasureSpace& space);

/// inf{lambda > 0 : modular <= 1}; bracket from 1 by factors of 4 (at most
/// 60 steps), then log-space bisection.
NormResult luxemburg_norm(const YoungFunction& phi, const FunctionSpec& f, const MeasureSpace& space,
                          const QuadratureSettings& settings = {});

/// (int_0^inf [t mu_f(t)^{1/p}]^q dt/t)^{1/q}, or sup_t t mu_f(t)^{1/p} when
/// q is +inf.
NormResult lorentz_quasinorm(double p, double q, const FunctionSpec& f, const MeasureSpace& space,
                             const QuadratureSettings& settings = {});

/// 1 / Phi^{-1}(1 / mu(E)); 0 when mu(E) = 0.
double indicator_luxemburg_closed_form(const YoungFunction& phi, double measure);

/// q^{-1/q} mu(E)^{1/p}, with q^{-1/q} = 1 at q = inf.
double indicator_lorentz_closed_form(double p, double q, double measure);

struct LayerCakeCheck {
  double lhs;
  double rhs;
  double relative_gap;
};

/// Direct modular at lambda = 1 against the layer-cake integral. Throws
/// InconsistencyError when exactly one side is infinite.
LayerCakeCheck layer_cake_check(const YoungFunction& phi, const FunctionSpec& f, const MeasureSpace& space,
                                const QuadratureSettings& settings = {});

struct ScalingIdentityReport {
  double lorentz_norm;          // ||f||_{p,q}
  double lorentz_via_power;     // || |f|^q ||_{p/q,1}^{1/q}
  double lorentz_gap;
  /// Gap after dividing the power route by q^{1/q}, the factor produced by
  /// the substitution t = s^q under the dt/t definition.
  double lorentz_gap_normalized;
  double orlicz_norm;           // ||f||_Phi
  double orlicz_via_power;      // || |f|^q ||_{Phi((.)^{1/q})}^{1/q}
  double orlicz_gap;
  bool holds;
};

ScalingIdentityReport scaling_identity_check(double p, double q, const YoungFunction& phi, const FunctionSpec& f,
                                             const MeasureSpace& space, const QuadratureSettings& settings = {},
                                             double tolerance = 1e-6);

/// ||f||_{p,q2} / ||f||_{p,q1} for q1 <= q2. DegenerateInputError when the
/// denominator vanishes.
double embedding_ratio(double p, double q1, double q2, const FunctionSpec& f, const MeasureSpace& space,
                       const QuadratureSettings& settings = {});

}  // namespace orlicz
