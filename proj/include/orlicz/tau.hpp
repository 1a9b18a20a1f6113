#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "orlicz/measure.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

namespace map {

/// y -> y on R.
struct Identity {};
/// y -> floor(|y|^{p/q}), R -> Z.
struct GaussPower {
  double p;
  double q;
};
/// y -> floor({phi^{-1}(1/|y|)}^{-p}), R -> Z.
struct OrliczInverse {
  YoungFunction phi;
  double p;
};
/// y -> floor({log(1 + 1/|y|)}^{-p}), R -> Z.
struct LogMap {
  double p;
};
/// base with codomain restricted to K = {1, ..., k}; the domain shrinks to
/// the preimage of K.
struct FiniteRestriction {
  std::shared_ptr<const TauMap> base;
  std::int64_t k;
};

}  // namespace map

/// Measurable nonsingular map from the line into the line or the integers,
/// with exact preimages of sets.
class TauMap {
 public:
  using Variant = std::variant<map::Identity, map::GaussPower, map::OrliczInverse, map::LogMap,
                               map::FiniteRestriction>;

  explicit TauMap(Variant v);

  static TauMap identity();
  static TauMap gauss_power(double p, double q);
  static TauMap orlicz_inverse(YoungFunction phi, double p);
  static TauMap log_map(double p);
  static TauMap finite_restriction(const TauMap& base, std::int64_t k);

  const Variant& variant() const noexcept { return v_; }

  MeasureSpace domain() const { return MeasureSpace::lebesgue_line(); }
  MeasureSpace codomain() const;

  /// tau(y). Integer codomains return integral doubles; FiniteRestriction
  /// throws DomainError for y outside the restricted domain.
  double operator()(double y) const;

  std::string describe() const;

 private:
  Variant v_;
};

/// inf{|y| : tau(y) >= k} for the integer-valued maps, k >= 0. The preimage
/// of {k} is {a_k <= |y| < a_{k+1}}.
double level_threshold(const TauMap& tau, std::int64_t k);

/// Exact preimage of e as a normalized interval union; the left-open pieces
/// of symmetric preimages are stored in reflected half-open form.
MeasurableSet tau_preimage(const TauMap& tau, const MeasurableSet& e);

}  // namespace orlicz
