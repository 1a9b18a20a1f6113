#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

namespace transform {

/// Interior pieces in log t; the unbounded ends are mapped to (0, 1] by
/// t = k exp(+-(1/v - 1)) and integrated over dyadic cells in v.
struct Compactified {};
/// Integrate over (0, t_max] only; the truncation level is reported.
struct Truncated {
  double t_max;
};

}  // namespace transform

struct QuadratureSettings {
  double relative_tolerance = 1e-8;
  double absolute_floor = 1e-14;
  std::size_t max_subdivisions = 2000;
  std::variant<transform::Compactified, transform::Truncated> transform = transform::Compactified{};

  /// Throws ArgumentError on nonpositive tolerances or t_max.
  void validate() const;
};

enum class ValueStatus { finite, infinite, zero };

std::string to_string(ValueStatus status);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  ValueStatus status = ValueStatus::zero;
  /// Largest (or smallest) t reached when an end was cut off or divergence
  /// was certified there.
  std::optional<double> truncation;
};

/// int_{lower}^{upper} h(t) dt / t for a nonnegative h, with lower >= 0 and
/// upper possibly +inf. `knots` are points where h may jump or kink; h is
/// never evaluated exactly at a knot.
///
/// The value is +inf when h is infinite on a piece of positive length, when
/// the partial integral exceeds 1 / absolute_floor, or when successive
/// dyadic cells of an unbounded end stop decaying.
QuadratureResult integrate_dlog(const std::function<double(double)>& h, std::vector<double> knots, double lower,
                                double upper, const QuadratureSettings& settings = {});

/// Adaptive Simpson on [a, b] (finite); endpoints are nudged inward.
double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double relative_tolerance,
                        double absolute_floor, std::size_t* budget);

}  // namespace orlicz
