#include "orlicz/tau.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// tau(y) for the integer-valued maps before restriction; +inf maps to a
// large sentinel via floor of +inf.
double raw_integer_value(const TauMap::Variant& v, double y) {
  const double ay = std::abs(y);
  return std::visit(overloaded{
                        [](const map::Identity&) -> double { throw ArgumentError("identity is not integer valued"); },
                        [ay](const map::GaussPower& m) { return std::floor(std::pow(ay, m.p / m.q)); },
                        [ay](const map::OrliczInverse& m) {
                          if (ay == 0.0) return 0.0;
                          const double inv = generalized_inverse(m.phi, 1.0 / ay);
                          return std::floor(std::pow(inv, -m.p));
                        },
                        [ay](const map::LogMap& m) {
                          if (ay == 0.0) return 0.0;
                          return std::floor(std::pow(std::log1p(1.0 / ay), -m.p));
                        },
                        [ay](const map::FiniteRestriction& m) { return (*m.base)(ay); },
                    },
                    v);
}

}  // namespace

TauMap::TauMap(Variant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const map::Identity&) {},
                 [](const map::GaussPower& m) {
                   if (!(m.p > 0.0) || !(m.q > 0.0) || !std::isfinite(m.p) || !std::isfinite(m.q)) {
                     throw ArgumentError("gauss_power: p and q must be positive and finite");
                   }
                 },
                 [](const map::OrliczInverse& m) {
                   if (!(m.p >= 1.0) || !std::isfinite(m.p)) throw ArgumentError("orlicz_inverse: p must be >= 1");
                 },
                 [](const map::LogMap& m) {
                   if (!(m.p >= 1.0) || !std::isfinite(m.p)) throw ArgumentError("log_map: p must be >= 1");
                 },
                 [](const map::FiniteRestriction& m) {
                   if (!m.base) throw ArgumentError("finite_restriction: missing base map");
                   if (m.k <= 0) throw ArgumentError("finite_restriction: k must be positive");
                   if (m.base->codomain().kind != SpaceKind::counting_integers) {
                     throw ArgumentError("finite_restriction: base map must take values in Z");
                   }
                 },
             },
             v_);
}

TauMap TauMap::identity() { return TauMap(map::Identity{}); }
TauMap TauMap::gauss_power(double p, double q) { return TauMap(map::GaussPower{p, q}); }
TauMap TauMap::orlicz_inverse(YoungFunction phi, double p) { return TauMap(map::OrliczInverse{std::move(phi), p}); }
TauMap TauMap::log_map(double p) { return TauMap(map::LogMap{p}); }
TauMap TauMap::finite_restriction(const TauMap& base, std::int64_t k) {
  return TauMap(map::FiniteRestriction{std::make_shared<const TauMap>(base), k});
}

MeasureSpace TauMap::codomain() const {
  if (std::holds_alternative<map::Identity>(v_)) return MeasureSpace::lebesgue_line();
  if (const auto* r = std::get_if<map::FiniteRestriction>(&v_)) return MeasureSpace::counting_finite(r->k);
  return MeasureSpace::counting_integers();
}

double TauMap::operator()(double y) const {
  if (std::isnan(y)) throw DomainError("tau: NaN argument");
  if (std::holds_alternative<map::Identity>(v_)) return y;
  const double value = raw_integer_value(v_, y);
  if (const auto* r = std::get_if<map::FiniteRestriction>(&v_)) {
    if (value < 1.0 || value > static_cast<double>(r->k)) {
      throw DomainError("tau: point lies outside the restricted domain");
    }
  }
  return value;
}

std::string TauMap::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const map::Identity&) { os << "identity"; },
                 [&](const map::GaussPower& m) { os << "gauss_power(p=" << m.p << ", q=" << m.q << ")"; },
                 [&](const map::OrliczInverse& m) { os << "orlicz_inverse(" << m.phi.describe() << ", p=" << m.p << ")"; },
                 [&](const map::LogMap& m) { os << "log_map(p=" << m.p << ")"; },
                 [&](const map::FiniteRestriction& m) { os << "finite_restriction(" << m.base->describe() << ", k=" << m.k << ")"; },
             },
             v_);
  return os.str();
}

double level_threshold(const TauMap& tau, std::int64_t k) {
  if (k < 0) throw ArgumentError("level_threshold: k must be >= 0");
  if (k == 0) return 0.0;
  const double kd = static_cast<double>(k);
  return std::visit(overloaded{
                        [](const map::Identity&) -> double { throw ArgumentError("identity has no level thresholds"); },
                        [kd](const map::GaussPower& m) { return std::pow(kd, m.q / m.p); },
                        [kd](const map::OrliczInverse& m) { return 1.0 / eval_young(m.phi, std::pow(kd, -1.0 / m.p)); },
                        [kd](const map::LogMap& m) { return 1.0 / std::expm1(std::pow(kd, -1.0 / m.p)); },
                        [k](const map::FiniteRestriction& m) { return level_threshold(*m.base, k); },
                    },
                    tau.variant());
}

MeasurableSet tau_preimage(const TauMap& tau, const MeasurableSet& e) {
  if (std::holds_alternative<map::Identity>(tau.variant())) {
    if (!e.is_interval_union()) throw ArgumentError("tau_preimage: identity expects an interval union");
    return e;
  }
  if (!e.is_integer_set()) throw ArgumentError("tau_preimage: integer-valued map expects an integer set");
  const auto codomain = tau.codomain();
  if (!belongs_to(codomain, e)) {
    throw ArgumentError("tau_preimage: set " + e.describe() + " is not a subset of " + codomain.describe());
  }
  std::vector<Interval> pieces;
  for (const auto& run : e.as_integers().runs()) {
    if (run.last < 0) continue;
    const std::int64_t n = std::max<std::int64_t>(run.first, 0);
    const double lo = level_threshold(tau, n);
    const double hi = level_threshold(tau, run.last + 1);
    pieces.push_back({lo, hi});
    pieces.push_back({-hi, -lo});
  }
  return IntervalUnion(std::move(pieces));
}

}  // namespace orlicz
