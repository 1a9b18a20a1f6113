#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

class TauMap;

enum class SpaceKind { lebesgue_line, counting_integers, counting_finite };

/// Lebesgue measure on R, counting measure on Z, or counting measure on
/// K = {1, ..., size}.
struct MeasureSpace {
  SpaceKind kind = SpaceKind::lebesgue_line;
  std::int64_t size = 0;

  static MeasureSpace lebesgue_line() { return {SpaceKind::lebesgue_line, 0}; }
  static MeasureSpace counting_integers() { return {SpaceKind::counting_integers, 0}; }
  static MeasureSpace counting_finite(std::int64_t k);

  bool is_counting() const noexcept { return kind != SpaceKind::lebesgue_line; }
  std::string describe() const;

  friend bool operator==(const MeasureSpace&, const MeasureSpace&) = default;
};

/// Half-open [lower, upper); endpoints may be infinite.
struct Interval {
  double lower;
  double upper;

  double length() const noexcept { return upper - lower; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Inclusive run {first, ..., last} of integers.
struct IntegerRun {
  std::int64_t first;
  std::int64_t last;

  std::int64_t size() const noexcept { return last - first + 1; }
  friend bool operator==(const IntegerRun&, const IntegerRun&) = default;
};

/// Finite union of half-open intervals, kept sorted, disjoint and merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> pieces);

  std::span<const Interval> pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  bool contains(double x) const;
  double measure() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// Finite set of integers, stored as maximal runs of consecutive values.
class IntegerSet {
 public:
  IntegerSet() = default;
  explicit IntegerSet(std::vector<std::int64_t> elements);
  static IntegerSet from_runs(std::vector<IntegerRun> runs);
  static IntegerSet range(std::int64_t first, std::int64_t last);

  std::span<const IntegerRun> runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  bool contains(std::int64_t n) const;
  std::int64_t cardinality() const;
  std::int64_t min() const;
  std::int64_t max() const;
  /// Sorted element list; intended for small sets.
  std::vector<std::int64_t> elements() const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<IntegerRun> runs_;
};

/// A measurable set in one of the supported spaces: interval unions for the
/// line, integer sets for the counting spaces.
class MeasurableSet {
 public:
  MeasurableSet() = default;
  MeasurableSet(IntervalUnion s) : repr_(std::move(s)) {}
  MeasurableSet(IntegerSet s) : repr_(std::move(s)) {}

  static MeasurableSet intervals(std::vector<Interval> pieces) { return IntervalUnion(std::move(pieces)); }
  static MeasurableSet integers(std::vector<std::int64_t> elements) { return IntegerSet(std::move(elements)); }

  bool is_interval_union() const noexcept { return std::holds_alternative<IntervalUnion>(repr_); }
  bool is_integer_set() const noexcept { return std::holds_alternative<IntegerSet>(repr_); }
  const IntervalUnion& as_intervals() const;
  const IntegerSet& as_integers() const;
  bool empty() const;
  /// Largest |x| over the set's points or finite endpoints; 0 when empty.
  double scale() const;
  std::string describe() const;

  friend bool operator==(const MeasurableSet&, const MeasurableSet&) = default;

 private:
  std::variant<IntervalUnion, IntegerSet> repr_;
};

/// Measure of e in the space; throws ArgumentError on a kind mismatch or,
/// for counting_finite, on elements outside {1, ..., size}.
double measure_of(const MeasureSpace& space, const MeasurableSet& e);

/// True when the set's kind matches the space (and lies in K for finite spaces).
bool belongs_to(const MeasureSpace& space, const MeasurableSet& e);

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_intersect(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_difference(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_normalize(const MeasurableSet& a);

class FunctionSpec;

namespace fn {

struct Piece {
  MeasurableSet set;
  double value;
};
/// Finite combination of values on pairwise-disjoint sets.
struct Simple {
  std::vector<Piece> pieces;
};
/// (1 + |x|)^{-1/p} (log(3 + |x|))^{-1/r}
struct PowerLogDecay {
  double p;
  double r;
};
/// |x|^{-gamma} on |x| < radius, zero elsewhere.
struct RadialPower {
  double gamma;
  double radius;
};
struct Indicator {
  MeasurableSet set;
};
/// y -> inner(tau(y)).
struct Composed {
  std::shared_ptr<const TauMap> tau;
  std::shared_ptr<const FunctionSpec> inner;
};

}  // namespace fn

/// A real function on a measure space with a known distribution function.
class FunctionSpec {
 public:
  using Variant = std::variant<fn::Simple, fn::PowerLogDecay, fn::RadialPower, fn::Indicator, fn::Composed>;

  explicit FunctionSpec(Variant v);

  static FunctionSpec simple(std::vector<fn::Piece> pieces);
  static FunctionSpec power_log_decay(double p, double r);
  static FunctionSpec radial_power(double gamma, double radius);
  static FunctionSpec indicator(MeasurableSet set);
  static FunctionSpec composed(const TauMap& tau, const FunctionSpec& inner);

  const Variant& variant() const noexcept { return v_; }

  /// Pointwise value; integer points of counting spaces are passed as doubles.
  double operator()(double x) const;

  std::string describe() const;

 private:
  Variant v_;
};

/// mu({x : |f(x)| > t}).
double distribution(const MeasureSpace& space, const FunctionSpec& f, double t);

/// {x : |f(x)| > t} as a measurable set of the space. Throws ArgumentError
/// when the set is not representable (infinite integer sets at t = 0).
MeasurableSet superlevel_set(const MeasureSpace& space, const FunctionSpec& f, double t);

/// ess sup |f| (an upper bound for composed functions); may be +inf.
double essential_sup(const MeasureSpace& space, const FunctionSpec& f);

/// Levels t at which the distribution function jumps or has a kink.
std::vector<double> distribution_breakpoints(const MeasureSpace& space, const FunctionSpec& f);

/// |f|^q in the same family (Simple, Indicator, PowerLogDecay, RadialPower,
/// Composed of those).
FunctionSpec abs_power(const FunctionSpec& f, double q);

/// c f for Simple / Indicator; ArgumentError otherwise.
FunctionSpec scale_function(const FunctionSpec& f, double c);

/// Throws ArgumentError when f cannot live on the space.
void check_function_space(const MeasureSpace& space, const FunctionSpec& f);

}  // namespace orlicz
