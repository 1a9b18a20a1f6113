#include "orlicz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/tau.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kBisectionRelTol = 1e-12;

std::vector<Interval> normalize_pieces(std::vector<Interval> pieces) {
  for (const auto& iv : pieces) {
    if (std::isnan(iv.lower) || std::isnan(iv.upper)) throw ArgumentError("interval endpoints must not be NaN");
  }
  std::erase_if(pieces, [](const Interval& iv) { return !(iv.lower < iv.upper); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lower < b.lower; });
  std::vector<Interval> out;
  for (const auto& iv : pieces) {
    if (!out.empty() && iv.lower <= out.back().upper) {
      out.back().upper = std::max(out.back().upper, iv.upper);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<IntegerRun> normalize_runs(std::vector<IntegerRun> runs) {
  std::erase_if(runs, [](const IntegerRun& r) { return r.last < r.first; });
  std::sort(runs.begin(), runs.end(), [](const IntegerRun& a, const IntegerRun& b) { return a.first < b.first; });
  std::vector<IntegerRun> out;
  for (const auto& r : runs) {
    if (!out.empty() && r.first <= out.back().last + 1) {
      out.back().last = std::max(out.back().last, r.last);
    } else {
      out.push_back(r);
    }
  }
  return out;
}

void require_same_kind(const MeasurableSet& a, const MeasurableSet& b, const char* op) {
  if (a.is_interval_union() != b.is_interval_union()) {
    throw ArgumentError(std::string(op) + ": operands are sets of different kinds");
  }
}

double power_log_value(const fn::PowerLogDecay& f, double x) {
  const double ax = std::abs(x);
  return std::pow(1.0 + ax, -1.0 / f.p) * std::pow(std::log(3.0 + ax), -1.0 / f.r);
}

// Largest R >= 0 with f(R) > t on the line, f strictly decreasing in |x|.
double power_log_radius(const fn::PowerLogDecay& f, double t) {
  double lo = 0.0;
  double hi = 1.0;
  while (power_log_value(f, hi) > t) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) return kInfinity;
  }
  while (hi - lo > kBisectionRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (power_log_value(f, mid) > t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Largest integer N >= 0 with f(N) > t, or -1 when f(0) <= t.
std::int64_t power_log_integer_radius(const fn::PowerLogDecay& f, double t) {
  if (!(power_log_value(f, 0.0) > t)) return -1;
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  while (power_log_value(f, static_cast<double>(hi)) > t) {
    lo = hi;
    if (hi >= kLimit) throw ArgumentError("superlevel set exceeds the representable integer range");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (power_log_value(f, static_cast<double>(mid)) > t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MeasureSpace MeasureSpace::counting_finite(std::int64_t k) {
  if (k <= 0) throw ArgumentError("counting_finite: size must be positive");
  return {SpaceKind::counting_finite, k};
}

std::string MeasureSpace::describe() const {
  switch (kind) {
    case SpaceKind::lebesgue_line:
      return "lebesgue_line";
    case SpaceKind::counting_integers:
      return "counting_integers";
    case SpaceKind::counting_finite:
      return "counting_finite(" + std::to_string(size) + ")";
  }
  return "?";
}

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) : pieces_(normalize_pieces(std::move(pieces))) {}

bool IntervalUnion::contains(double x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lower; });
  if (it == pieces_.begin()) return false;
  --it;
  return x >= it->lower && x < it->upper;
}

double IntervalUnion::measure() const {
  double total = 0.0;
  for (const auto& iv : pieces_) total += iv.length();
  return total;
}

IntegerSet::IntegerSet(std::vector<std::int64_t> elements) {
  std::vector<IntegerRun> runs;
  runs.reserve(elements.size());
  for (auto e : elements) runs.push_back({e, e});
  runs_ = normalize_runs(std::move(runs));
}

IntegerSet IntegerSet::from_runs(std::vector<IntegerRun> runs) {
  IntegerSet s;
  s.runs_ = normalize_runs(std::move(runs));
  return s;
}

IntegerSet IntegerSet::range(std::int64_t first, std::int64_t last) { return from_runs({{first, last}}); }

bool IntegerSet::contains(std::int64_t n) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), n,
                             [](std::int64_t v, const IntegerRun& r) { return v < r.first; });
  if (it == runs_.begin()) return false;
  --it;
  return n <= it->last;
}

std::int64_t IntegerSet::cardinality() const {
  std::int64_t total = 0;
  for (const auto& r : runs_) total += r.size();
  return total;
}

std::int64_t IntegerSet::min() const {
  if (runs_.empty()) throw ArgumentError("min of empty integer set");
  return runs_.front().first;
}

std::int64_t IntegerSet::max() const {
  if (runs_.empty()) throw ArgumentError("max of empty integer set");
  return runs_.back().last;
}

std::vector<std::int64_t> IntegerSet::elements() const {
  std::vector<std::int64_t> out;
  for (const auto& r : runs_) {
    for (auto n = r.first; n <= r.last; ++n) out.push_back(n);
  }
  return out;
}

const IntervalUnion& MeasurableSet::as_intervals() const {
  if (!is_interval_union()) throw ArgumentError("expected an interval union, got an integer set");
  return std::get<IntervalUnion>(repr_);
}

const IntegerSet& MeasurableSet::as_integers() const {
  if (!is_integer_set()) throw ArgumentError("expected an integer set, got an interval union");
  return std::get<IntegerSet>(repr_);
}

bool MeasurableSet::empty() const {
  return std::visit([](const auto& s) { return s.empty(); }, repr_);
}

double MeasurableSet::scale() const {
  return std::visit(overloaded{
                        [](const IntervalUnion& s) {
                          double out = 0.0;
                          for (const auto& iv : s.pieces()) {
                            for (double e : {iv.lower, iv.upper}) {
                              if (std::isfinite(e)) out = std::max(out, std::abs(e));
                            }
                          }
                          return out;
                        },
                        [](const IntegerSet& s) {
                          if (s.empty()) return 0.0;
                          return std::max(std::abs(static_cast<double>(s.min())), std::abs(static_cast<double>(s.max())));
                        },
                    },
                    repr_);
}

std::string MeasurableSet::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const IntervalUnion& s) {
                   if (s.empty()) os << "{}";
                   bool first = true;
                   for (const auto& iv : s.pieces()) {
                     os << (first ? "" : " u ") << "[" << iv.lower << "," << iv.upper << ")";
                     first = false;
                   }
                 },
                 [&](const IntegerSet& s) {
                   os << "{";
                   bool first = true;
                   for (const auto& r : s.runs()) {
                     os << (first ? "" : ",");
                     if (r.first == r.last) {
                       os << r.first;
                     } else {
                       os << r.first << ".." << r.last;
                     }
                     first = false;
                   }
                   os << "}";
                 },
             },
             repr_);
  return os.str();
}

bool belongs_to(const MeasureSpace& space, const MeasurableSet& e) {
  if (space.kind == SpaceKind::lebesgue_line) return e.is_interval_union();
  if (!e.is_integer_set()) return false;
  if (space.kind == SpaceKind::counting_finite) {
    const auto& s = e.as_integers();
    return s.empty() || (s.min() >= 1 && s.max() <= space.size);
  }
  return true;
}

double measure_of(const MeasureSpace& space, const MeasurableSet& e) {
  if (!belongs_to(space, e)) {
    throw ArgumentError("measure_of: set " + e.describe() + " does not belong to " + space.describe());
  }
  if (space.kind == SpaceKind::lebesgue_line) return e.as_intervals().measure();
  return static_cast<double>(e.as_integers().cardinality());
}

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_kind(a, b, "set_union");
  if (a.is_interval_union()) {
    std::vector<Interval> all(a.as_intervals().pieces().begin(), a.as_intervals().pieces().end());
    all.insert(all.end(), b.as_intervals().pieces().begin(), b.as_intervals().pieces().end());
    return IntervalUnion(std::move(all));
  }
  std::vector<IntegerRun> all(a.as_integers().runs().begin(), a.as_integers().runs().end());
  all.insert(all.end(), b.as_integers().runs().begin(), b.as_integers().runs().end());
  return IntegerSet::from_runs(std::move(all));
}

MeasurableSet set_intersect(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_kind(a, b, "set_intersect");
  if (a.is_interval_union()) {
    const auto pa = a.as_intervals().pieces();
    const auto pb = b.as_intervals().pieces();
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
      const double lo = std::max(pa[i].lower, pb[j].lower);
      const double hi = std::min(pa[i].upper, pb[j].upper);
      if (lo < hi) out.push_back({lo, hi});
      if (pa[i].upper < pb[j].upper) {
        ++i;
      } else {
        ++j;
      }
    }
    return IntervalUnion(std::move(out));
  }
  const auto ra = a.as_integers().runs();
  const auto rb = b.as_integers().runs();
  std::vector<IntegerRun> out;
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < rb.size()) {
    const auto lo = std::max(ra[i].first, rb[j].first);
    const auto hi = std::min(ra[i].last, rb[j].last);
    if (lo <= hi) out.push_back({lo, hi});
    if (ra[i].last < rb[j].last) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntegerSet::from_runs(std::move(out));
}

MeasurableSet set_difference(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_kind(a, b, "set_difference");
  if (a.is_interval_union()) {
    std::vector<Interval> out;
    const auto pb = b.as_intervals().pieces();
    for (const auto& iv : a.as_intervals().pieces()) {
      double cursor = iv.lower;
      for (const auto& cut : pb) {
        if (cut.upper <= cursor || cut.lower >= iv.upper) continue;
        if (cut.lower > cursor) out.push_back({cursor, cut.lower});
        cursor = std::max(cursor, cut.upper);
        if (cursor >= iv.upper) break;
      }
      if (cursor < iv.upper) out.push_back({cursor, iv.upper});
    }
    return IntervalUnion(std::move(out));
  }
  std::vector<IntegerRun> out;
  const auto rb = b.as_integers().runs();
  for (const auto& r : a.as_integers().runs()) {
    std::int64_t cursor = r.first;
    for (const auto& cut : rb) {
      if (cut.last < cursor || cut.first > r.last) continue;
      if (cut.first > cursor) out.push_back({cursor, cut.first - 1});
      if (cut.last >= r.last) {
        cursor = r.last + 1;
        break;
      }
      cursor = std::max(cursor, cut.last + 1);
    }
    if (cursor <= r.last) out.push_back({cursor, r.last});
  }
  return IntegerSet::from_runs(std::move(out));
}

MeasurableSet set_normalize(const MeasurableSet& a) {
  if (a.is_interval_union()) {
    const auto p = a.as_intervals().pieces();
    return IntervalUnion(std::vector<Interval>(p.begin(), p.end()));
  }
  const auto r = a.as_integers().runs();
  return IntegerSet::from_runs(std::vector<IntegerRun>(r.begin(), r.end()));
}

// ---------------------------------------------------------------------------
// functions

FunctionSpec::FunctionSpec(Variant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const fn::Simple& s) {
                   for (std::size_t i = 0; i < s.pieces.size(); ++i) {
                     if (!std::isfinite(s.pieces[i].value)) throw ArgumentError("simple: values must be finite");
                     for (std::size_t j = 0; j < i; ++j) {
                       if (s.pieces[i].set.is_interval_union() != s.pieces[j].set.is_interval_union()) {
                         throw ArgumentError("simple: pieces mix set kinds");
                       }
                       if (!set_intersect(s.pieces[i].set, s.pieces[j].set).empty()) {
                         throw ArgumentError("simple: supports must be pairwise disjoint");
                       }
                     }
                   }
                 },
                 [](const fn::PowerLogDecay& f) {
                   if (!(f.p > 0.0) || !(f.r > 0.0)) throw ArgumentError("power_log_decay: p and r must be positive");
                 },
                 [](const fn::RadialPower& f) {
                   if (!(f.gamma >= 0.0) || !std::isfinite(f.gamma)) throw ArgumentError("radial_power: gamma must be >= 0");
                   if (!(f.radius > 0.0)) throw ArgumentError("radial_power: radius must be positive");
                 },
                 [](const fn::Indicator&) {},
                 [](const fn::Composed& c) {
                   if (!c.tau || !c.inner) throw ArgumentError("composed: missing map or inner function");
                 },
             },
             v_);
}

FunctionSpec FunctionSpec::simple(std::vector<fn::Piece> pieces) { return FunctionSpec(fn::Simple{std::move(pieces)}); }
FunctionSpec FunctionSpec::power_log_decay(double p, double r) { return FunctionSpec(fn::PowerLogDecay{p, r}); }
FunctionSpec FunctionSpec::radial_power(double gamma, double radius) {
  return FunctionSpec(fn::RadialPower{gamma, radius});
}
FunctionSpec FunctionSpec::indicator(MeasurableSet set) { return FunctionSpec(fn::Indicator{std::move(set)}); }
FunctionSpec FunctionSpec::composed(const TauMap& tau, const FunctionSpec& inner) {
  return FunctionSpec(fn::Composed{std::make_shared<const TauMap>(tau), std::make_shared<const FunctionSpec>(inner)});
}

namespace {

bool set_contains(const MeasurableSet& s, double x) {
  if (s.is_interval_union()) return s.as_intervals().contains(x);
  if (x != std::floor(x)) return false;
  return s.as_integers().contains(static_cast<std::int64_t>(x));
}

}  // namespace

double FunctionSpec::operator()(double x) const {
  return std::visit(overloaded{
                        [x](const fn::Simple& s) {
                          for (const auto& piece : s.pieces) {
                            if (set_contains(piece.set, x)) return piece.value;
                          }
                          return 0.0;
                        },
                        [x](const fn::PowerLogDecay& f) { return power_log_value(f, x); },
                        [x](const fn::RadialPower& f) {
                          const double ax = std::abs(x);
                          if (!(ax < f.radius)) return 0.0;
                          return f.gamma == 0.0 ? 1.0 : std::pow(ax, -f.gamma);
                        },
                        [x](const fn::Indicator& f) { return set_contains(f.set, x) ? 1.0 : 0.0; },
                        [x](const fn::Composed& c) { return (*c.inner)((*c.tau)(x)); },
                    },
                    v_);
}

std::string FunctionSpec::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const fn::Simple& s) { os << "simple(" << s.pieces.size() << " pieces)"; },
                 [&](const fn::PowerLogDecay& f) { os << "power_log_decay(p=" << f.p << ", r=" << f.r << ")"; },
                 [&](const fn::RadialPower& f) { os << "radial_power(gamma=" << f.gamma << ", radius=" << f.radius << ")"; },
                 [&](const fn::Indicator& f) { os << "indicator(" << f.set.describe() << ")"; },
                 [&](const fn::Composed& c) { os << "composed(" << c.tau->describe() << ", " << c.inner->describe() << ")"; },
             },
             v_);
  return os.str();
}

void check_function_space(const MeasureSpace& space, const FunctionSpec& f) {
  std::visit(overloaded{
                 [&](const fn::Simple& s) {
                   for (const auto& piece : s.pieces) {
                     if (!belongs_to(space, piece.set)) {
                       throw ArgumentError("simple: piece " + piece.set.describe() + " is not a set of " + space.describe());
                     }
                   }
                 },
                 [&](const fn::PowerLogDecay&) {},
                 [&](const fn::RadialPower&) {
                   if (space.is_counting()) throw ArgumentError("radial_power is only defined on the line");
                 },
                 [&](const fn::Indicator& ind) {
                   if (!belongs_to(space, ind.set)) {
                     throw ArgumentError("indicator: set " + ind.set.describe() + " is not a set of " + space.describe());
                   }
                 },
                 [&](const fn::Composed& c) {
                   if (!(space == c.tau->domain())) throw ArgumentError("composed: space differs from the map's domain");
                   check_function_space(c.tau->codomain(), *c.inner);
                 },
             },
             f.variant());
}

MeasurableSet superlevel_set(const MeasureSpace& space, const FunctionSpec& f, double t) {
  if (std::isnan(t) || t < 0.0) throw DomainError("superlevel_set: t must be >= 0");
  return std::visit(
      overloaded{
          [&](const fn::Simple& s) -> MeasurableSet {
            MeasurableSet out = space.is_counting() ? MeasurableSet(IntegerSet{}) : MeasurableSet(IntervalUnion{});
            for (const auto& piece : s.pieces) {
              if (std::abs(piece.value) > t) out = set_union(out, piece.set);
            }
            return out;
          },
          [&](const fn::PowerLogDecay& f) -> MeasurableSet {
            if (space.kind == SpaceKind::lebesgue_line) {
              if (!(power_log_value(f, 0.0) > t)) return IntervalUnion{};
              if (t == 0.0) return IntervalUnion({{-kInfinity, kInfinity}});
              const double r = power_log_radius(f, t);
              return IntervalUnion({{-r, r}});
            }
            if (t == 0.0 && space.kind == SpaceKind::counting_integers) {
              throw ArgumentError("superlevel_set: the support of power_log_decay on Z is infinite");
            }
            const auto n = space.kind == SpaceKind::counting_finite && t == 0.0
                               ? space.size
                               : power_log_integer_radius(f, t);
            if (n < 0) return IntegerSet{};
            if (space.kind == SpaceKind::counting_finite) {
              if (n < 1) return IntegerSet{};
              return IntegerSet::range(1, std::min(n, space.size));
            }
            return IntegerSet::range(-n, n);
          },
          [&](const fn::RadialPower& f) -> MeasurableSet {
            double r = f.radius;
            if (f.gamma == 0.0) {
              if (!(t < 1.0)) return IntervalUnion{};
            } else if (t > 0.0) {
              r = std::min(r, std::pow(t, -1.0 / f.gamma));
            }
            return IntervalUnion({{-r, r}});
          },
          [&](const fn::Indicator& f) -> MeasurableSet {
            if (t < 1.0) return f.set;
            return space.is_counting() ? MeasurableSet(IntegerSet{}) : MeasurableSet(IntervalUnion{});
          },
          [&](const fn::Composed& c) -> MeasurableSet {
            return tau_preimage(*c.tau, superlevel_set(c.tau->codomain(), *c.inner, t));
          },
      },
      f.variant());
}

double distribution(const MeasureSpace& space, const FunctionSpec& f, double t) {
  if (std::isnan(t) || t < 0.0) throw DomainError("distribution: t must be >= 0");
  return std::visit(
      overloaded{
          [&](const fn::Simple& s) {
            double total = 0.0;
            for (const auto& piece : s.pieces) {
              if (std::abs(piece.value) > t) total += measure_of(space, piece.set);
            }
            return total;
          },
          [&](const fn::PowerLogDecay& f) -> double {
            if (!(power_log_value(f, 0.0) > t)) return 0.0;
            switch (space.kind) {
              case SpaceKind::lebesgue_line:
                return t == 0.0 ? kInfinity : 2.0 * power_log_radius(f, t);
              case SpaceKind::counting_integers:
                return t == 0.0 ? kInfinity : 2.0 * static_cast<double>(power_log_integer_radius(f, t)) + 1.0;
              case SpaceKind::counting_finite: {
                if (t == 0.0) return static_cast<double>(space.size);
                const auto n = power_log_integer_radius(f, t);
                return static_cast<double>(std::clamp<std::int64_t>(n, 0, space.size));
              }
            }
            return 0.0;
          },
          [&](const fn::RadialPower&) { return measure_of(space, superlevel_set(space, f, t)); },
          [&](const fn::Indicator& f) { return t < 1.0 ? measure_of(space, f.set) : 0.0; },
          [&](const fn::Composed&) { return measure_of(space, superlevel_set(space, f, t)); },
      },
      f.variant());
}

double essential_sup(const MeasureSpace& space, const FunctionSpec& f) {
  return std::visit(overloaded{
                        [&](const fn::Simple& s) {
                          double out = 0.0;
                          for (const auto& piece : s.pieces) {
                            if (measure_of(space, piece.set) > 0.0) out = std::max(out, std::abs(piece.value));
                          }
                          return out;
                        },
                        [&](const fn::PowerLogDecay& f) {
                          return power_log_value(f, space.kind == SpaceKind::counting_finite ? 1.0 : 0.0);
                        },
                        [&](const fn::RadialPower& f) { return f.gamma == 0.0 ? 1.0 : kInfinity; },
                        [&](const fn::Indicator& f) { return measure_of(space, f.set) > 0.0 ? 1.0 : 0.0; },
                        [&](const fn::Composed& c) { return essential_sup(c.tau->codomain(), *c.inner); },
                    },
                    f.variant());
}

std::vector<double> distribution_breakpoints(const MeasureSpace& space, const FunctionSpec& f) {
  std::vector<double> out;
  std::visit(overloaded{
                 [&](const fn::Simple& s) {
                   for (const auto& piece : s.pieces) {
                     if (piece.value != 0.0) out.push_back(std::abs(piece.value));
                   }
                 },
                 [&](const fn::PowerLogDecay& f) {
                   if (space.is_counting()) {
                     const std::int64_t first = space.kind == SpaceKind::counting_finite ? 1 : 0;
                     const std::int64_t last = space.kind == SpaceKind::counting_finite ? std::min<std::int64_t>(space.size, 256) : 256;
                     for (auto n = first; n <= last; ++n) out.push_back(power_log_value(f, static_cast<double>(n)));
                   } else {
                     out.push_back(power_log_value(f, 0.0));
                   }
                 },
                 [&](const fn::RadialPower& f) {
                   if (f.gamma > 0.0) out.push_back(std::pow(f.radius, -f.gamma));
                   else out.push_back(1.0);
                 },
                 [&](const fn::Indicator&) { out.push_back(1.0); },
                 [&](const fn::Composed& c) { out = distribution_breakpoints(c.tau->codomain(), *c.inner); },
             },
             f.variant());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FunctionSpec abs_power(const FunctionSpec& f, double q) {
  if (!(q > 0.0)) throw ArgumentError("abs_power: q must be positive");
  return std::visit(overloaded{
                        [&](const fn::Simple& s) {
                          std::vector<fn::Piece> pieces;
                          for (const auto& piece : s.pieces) pieces.push_back({piece.set, std::pow(std::abs(piece.value), q)});
                          return FunctionSpec::simple(std::move(pieces));
                        },
                        [&](const fn::PowerLogDecay& g) { return FunctionSpec::power_log_decay(g.p / q, g.r / q); },
                        [&](const fn::RadialPower& g) { return FunctionSpec::radial_power(g.gamma * q, g.radius); },
                        [&](const fn::Indicator&) { return f; },
                        [&](const fn::Composed& c) { return FunctionSpec::composed(*c.tau, abs_power(*c.inner, q)); },
                    },
                    f.variant());
}

FunctionSpec scale_function(const FunctionSpec& f, double c) {
  if (const auto* s = std::get_if<fn::Simple>(&f.variant())) {
    std::vector<fn::Piece> pieces;
    for (const auto& piece : s->pieces) pieces.push_back({piece.set, c * piece.value});
    return FunctionSpec::simple(std::move(pieces));
  }
  if (const auto* ind = std::get_if<fn::Indicator>(&f.variant())) {
    return FunctionSpec::simple({{ind->set, c}});
  }
  throw ArgumentError("scale_function: only simple and indicator functions can be scaled");
}

}  // namespace orlicz
