#include "orlicz/config.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void require_object(const Json& doc, const std::string& path) {
  if (!doc.is_object()) throw ConfigError(path, "expected an object");
}

const Json& field(const Json& doc, const std::string& key, const std::string& path) {
  require_object(doc, path);
  auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError(child(path, key), "missing required field");
  return *it;
}

double number(const Json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

double positive(const Json& v, const std::string& path) {
  const double x = number(v, path);
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(path, "must be a positive real, got " + v.dump());
  return x;
}

std::string text(const Json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

std::int64_t integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<std::int64_t>();
}

// Runs a constructor and turns its ArgumentError into a ConfigError at `path`.
template <class F>
auto guarded(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const ArgumentError& e) {
    throw ConfigError(path, e.what());
  }
}

std::vector<double> number_list(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], index(path, i)));
  return out;
}

Command command_from_string(const std::string& name, const std::string& path) {
  static const std::vector<std::pair<std::string, Command>> table = {
      {"young-validate", Command::young_validate}, {"young-complementary", Command::young_complementary},
      {"young-nabla2", Command::young_nabla2},     {"norm-orlicz", Command::norm_orlicz},
      {"norm-lorentz", Command::norm_lorentz},     {"certify", Command::certify},
      {"demo", Command::demo},                     {"demo-counterexample", Command::demo},
      {"reproduce-paper", Command::reproduce_paper},
  };
  std::string key = name;
  for (char& c : key) {
    if (c == ' ' || c == '_') c = '-';
  }
  for (const auto& [n, c] : table) {
    if (n == key) return c;
  }
  throw ConfigError(path, "unknown command '" + name + "'");
}

OutputFormat format_from_string(const std::string& name, const std::string& path) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "both") return OutputFormat::both;
  throw ConfigError(path, "unknown format '" + name + "' (expected json, csv or both)");
}

CounterexampleKind kind_from_string(const std::string& name, const std::string& path) {
  if (name == "ex1") return CounterexampleKind::ex1;
  if (name == "ex2_3") return CounterexampleKind::ex2_3;
  throw ConfigError(path, "unknown counterexample kind '" + name + "' (expected ex1 or ex2_3)");
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets = {
      "example-1",        "example-2", "example-3",   "example-4",      "lemma-layer-cake",
      "lemma-indicators", "oneil",     "nabla2-demo", "section-5-demo", "all",
  };
  return targets;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::young_validate:
      return "young-validate";
    case Command::young_complementary:
      return "young-complementary";
    case Command::young_nabla2:
      return "young-nabla2";
    case Command::norm_orlicz:
      return "norm-orlicz";
    case Command::norm_lorentz:
      return "norm-lorentz";
    case Command::certify:
      return "certify";
    case Command::demo:
      return "demo";
    case Command::reproduce_paper:
      return "reproduce-paper";
  }
  return "?";
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::both:
      return "both";
  }
  return "?";
}

std::string to_string(CounterexampleKind kind) { return kind == CounterexampleKind::ex1 ? "ex1" : "ex2_3"; }

Json extended(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double parse_extended(const Json& value, const std::string& path) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") return kInfinity;
    if (s == "-inf") return -kInfinity;
  }
  throw ConfigError(path, "expected a number or \"inf\"");
}

// ---------------------------------------------------------------------------
// Young functions

YoungFunction parse_young(const Json& doc, const std::string& path) {
  const std::string name = text(field(doc, "family", path), child(path, "family"));
  std::optional<double> cap;
  if (doc.contains("domain_cap")) cap = positive(doc["domain_cap"], child(path, "domain_cap"));
  return guarded(path, [&]() -> YoungFunction {
    if (name == "power") return YoungFunction(family::Power{positive(field(doc, "p", path), child(path, "p"))}, cap);
    if (name == "llogl") return YoungFunction(family::LLogL{}, cap);
    if (name == "exp_minus_one") return YoungFunction(family::ExpMinusOne{}, cap);
    if (name == "linear") return YoungFunction(family::Linear{}, cap);
    if (name == "power_composed") {
      auto base = std::make_shared<const YoungFunction>(parse_young(field(doc, "base", path), child(path, "base")));
      return YoungFunction(family::PowerComposed{base, positive(field(doc, "q", path), child(path, "q"))}, cap);
    }
    if (name == "tabulated") {
      const auto& knots = field(doc, "knots", path);
      const std::string kp = child(path, "knots");
      if (!knots.is_array()) throw ConfigError(kp, "expected an array of [t, value] pairs");
      std::vector<family::Knot> out;
      for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& k = knots[i];
        if (!k.is_array() || k.size() != 2) throw ConfigError(index(kp, i), "expected [t, value]");
        out.push_back({number(k[0], index(kp, i)), number(k[1], index(kp, i))});
      }
      return YoungFunction(family::Tabulated{std::move(out)}, cap);
    }
    throw ConfigError(child(path, "family"), "unknown Young family '" + name + "'");
  });
}

Json to_json(const YoungFunction& phi) {
  Json out = Json::object();
  std::visit(overloaded{
                 [&](const family::Power& f) {
                   out["family"] = "power";
                   out["p"] = f.p;
                 },
                 [&](const family::LLogL&) { out["family"] = "llogl"; },
                 [&](const family::ExpMinusOne&) { out["family"] = "exp_minus_one"; },
                 [&](const family::Linear&) { out["family"] = "linear"; },
                 [&](const family::PowerComposed& f) {
                   out["family"] = "power_composed";
                   out["base"] = to_json(*f.base);
                   out["q"] = f.q;
                 },
                 [&](const family::Tabulated& f) {
                   out["family"] = "tabulated";
                   Json knots = Json::array();
                   for (const auto& k : f.knots) knots.push_back(Json::array({k.t, k.value}));
                   out["knots"] = knots;
                 },
             },
             phi.family());
  if (phi.domain_cap()) out["domain_cap"] = *phi.domain_cap();
  return out;
}

// ---------------------------------------------------------------------------
// sets and spaces

MeasurableSet parse_set(const Json& doc, const std::string& path) {
  require_object(doc, path);
  if (doc.contains("intervals")) {
    const auto& iv = doc["intervals"];
    const std::string ip = child(path, "intervals");
    if (!iv.is_array()) throw ConfigError(ip, "expected an array of [a, b] pairs");
    std::vector<Interval> pieces;
    for (std::size_t i = 0; i < iv.size(); ++i) {
      if (!iv[i].is_array() || iv[i].size() != 2) throw ConfigError(index(ip, i), "expected [a, b]");
      const double a = parse_extended(iv[i][0], index(ip, i));
      const double b = parse_extended(iv[i][1], index(ip, i));
      if (!(a <= b)) throw ConfigError(index(ip, i), "need a <= b");
      pieces.push_back({a, b});
    }
    return guarded(path, [&] { return MeasurableSet(IntervalUnion(std::move(pieces))); });
  }
  if (doc.contains("integers")) {
    const auto& v = doc["integers"];
    const std::string ip = child(path, "integers");
    if (!v.is_array()) throw ConfigError(ip, "expected an array of integers");
    std::vector<std::int64_t> elems;
    for (std::size_t i = 0; i < v.size(); ++i) elems.push_back(integer(v[i], index(ip, i)));
    return IntegerSet(std::move(elems));
  }
  throw ConfigError(path, "expected {\"intervals\": [...]} or {\"integers\": [...]}");
}

Json to_json(const MeasurableSet& set) {
  Json out = Json::object();
  if (set.is_interval_union()) {
    Json pieces = Json::array();
    for (const auto& iv : set.as_intervals().pieces()) pieces.push_back(Json::array({extended(iv.lower), extended(iv.upper)}));
    out["intervals"] = pieces;
  } else {
    Json elems = Json::array();
    for (const auto& r : set.as_integers().runs()) {
      for (auto n = r.first; n <= r.last; ++n) elems.push_back(n);
    }
    out["integers"] = elems;
  }
  return out;
}

MeasureSpace parse_space(const Json& doc, const std::string& path) {
  if (doc.is_string()) {
    const auto s = doc.get<std::string>();
    if (s == "lebesgue_line") return MeasureSpace::lebesgue_line();
    if (s == "counting_integers") return MeasureSpace::counting_integers();
    throw ConfigError(path, "unknown space '" + s + "'");
  }
  const std::string kind = text(field(doc, "kind", path), child(path, "kind"));
  if (kind == "counting_finite") {
    const auto k = integer(field(doc, "size", path), child(path, "size"));
    if (k <= 0) throw ConfigError(child(path, "size"), "must be a positive integer");
    return MeasureSpace::counting_finite(k);
  }
  return parse_space(Json(kind), child(path, "kind"));
}

Json to_json(const MeasureSpace& space) {
  if (space.kind == SpaceKind::counting_finite) return Json{{"kind", "counting_finite"}, {"size", space.size}};
  return space.kind == SpaceKind::lebesgue_line ? "lebesgue_line" : "counting_integers";
}

// ---------------------------------------------------------------------------
// maps and functions

TauMap parse_tau(const Json& doc, const std::string& path) {
  const std::string name = text(field(doc, "map", path), child(path, "map"));
  return guarded(path, [&]() -> TauMap {
    if (name == "identity") return TauMap::identity();
    if (name == "gauss_power") {
      return TauMap::gauss_power(positive(field(doc, "p", path), child(path, "p")),
                                 positive(field(doc, "q", path), child(path, "q")));
    }
    if (name == "orlicz_inverse" || name == "log_map") {
      const double p = positive(field(doc, "p", path), child(path, "p"));
      if (p < 1.0) throw ConfigError(child(path, "p"), "must be >= 1");
      if (name == "log_map") return TauMap::log_map(p);
      return TauMap::orlicz_inverse(parse_young(field(doc, "phi", path), child(path, "phi")), p);
    }
    if (name == "finite_restriction") {
      const auto k = integer(field(doc, "k", path), child(path, "k"));
      if (k <= 0) throw ConfigError(child(path, "k"), "must be a positive integer");
      return TauMap::finite_restriction(parse_tau(field(doc, "base", path), child(path, "base")), k);
    }
    throw ConfigError(child(path, "map"), "unknown map '" + name + "'");
  });
}

Json to_json(const TauMap& tau) {
  return std::visit(overloaded{
                        [](const map::Identity&) { return Json{{"map", "identity"}}; },
                        [](const map::GaussPower& m) { return Json{{"map", "gauss_power"}, {"p", m.p}, {"q", m.q}}; },
                        [](const map::OrliczInverse& m) {
                          return Json{{"map", "orlicz_inverse"}, {"phi", to_json(m.phi)}, {"p", m.p}};
                        },
                        [](const map::LogMap& m) { return Json{{"map", "log_map"}, {"p", m.p}}; },
                        [](const map::FiniteRestriction& m) {
                          return Json{{"map", "finite_restriction"}, {"base", to_json(*m.base)}, {"k", m.k}};
                        },
                    },
                    tau.variant());
}

FunctionSpec parse_function(const Json& doc, const std::string& path) {
  const std::string name = text(field(doc, "family", path), child(path, "family"));
  return guarded(path, [&]() -> FunctionSpec {
    if (name == "power_log_decay") {
      return FunctionSpec::power_log_decay(positive(field(doc, "p", path), child(path, "p")),
                                           positive(field(doc, "r", path), child(path, "r")));
    }
    if (name == "radial_power") {
      const double gamma = number(field(doc, "gamma", path), child(path, "gamma"));
      if (!(gamma >= 0.0)) throw ConfigError(child(path, "gamma"), "must be >= 0");
      return FunctionSpec::radial_power(gamma, positive(field(doc, "radius", path), child(path, "radius")));
    }
    if (name == "indicator") return FunctionSpec::indicator(parse_set(field(doc, "set", path), child(path, "set")));
    if (name == "simple") {
      const auto& pieces = field(doc, "pieces", path);
      const std::string pp = child(path, "pieces");
      if (!pieces.is_array()) throw ConfigError(pp, "expected an array of {set, value}");
      std::vector<fn::Piece> out;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto ip = index(pp, i);
        out.push_back({parse_set(field(pieces[i], "set", ip), child(ip, "set")),
                       number(field(pieces[i], "value", ip), child(ip, "value"))});
      }
      return FunctionSpec::simple(std::move(out));
    }
    if (name == "composed") {
      return FunctionSpec::composed(parse_tau(field(doc, "tau", path), child(path, "tau")),
                                    parse_function(field(doc, "inner", path), child(path, "inner")));
    }
    throw ConfigError(child(path, "family"), "unknown function family '" + name + "'");
  });
}

Json to_json(const FunctionSpec& f) {
  return std::visit(overloaded{
                        [](const fn::Simple& s) {
                          Json pieces = Json::array();
                          for (const auto& piece : s.pieces) {
                            pieces.push_back(Json{{"set", to_json(piece.set)}, {"value", piece.value}});
                          }
                          return Json{{"family", "simple"}, {"pieces", pieces}};
                        },
                        [](const fn::PowerLogDecay& g) { return Json{{"family", "power_log_decay"}, {"p", g.p}, {"r", g.r}}; },
                        [](const fn::RadialPower& g) {
                          return Json{{"family", "radial_power"}, {"gamma", g.gamma}, {"radius", g.radius}};
                        },
                        [](const fn::Indicator& g) { return Json{{"family", "indicator"}, {"set", to_json(g.set)}}; },
                        [](const fn::Composed& c) {
                          return Json{{"family", "composed"}, {"tau", to_json(*c.tau)}, {"inner", to_json(*c.inner)}};
                        },
                    },
                    f.variant());
}

// ---------------------------------------------------------------------------
// run configuration

RunConfig parse_config(const Json& document) {
  require_object(document, "");
  RunConfig c;
  c.command = command_from_string(text(field(document, "command", ""), "command"), "command");
  const auto has = [&](const char* key) { return document.contains(key) && !document[key].is_null(); };

  if (has("phi")) c.phi = parse_young(document["phi"], "phi");
  if (has("f")) c.f = parse_function(document["f"], "f");
  if (has("space")) c.space = parse_space(document["space"], "space");
  if (has("tau")) c.tau = parse_tau(document["tau"], "tau");
  if (has("p")) c.p = positive(document["p"], "p");
  if (has("q")) {
    const double q = parse_extended(document["q"], "q");
    if (!(q > 0.0)) throw ConfigError("q", "must be positive or \"inf\"");
    c.q = q;
  }
  if (has("d")) {
    const double d = number(document["d"], "d");
    if (!(d >= 1.0) || !std::isfinite(d)) throw ConfigError("d", "must be a finite real >= 1 (the constant D >= 1)");
    c.d = d;
  }
  if (has("seed")) {
    const auto& seed = document["seed"];
    const bool ok = seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0);
    if (!ok) throw ConfigError("seed", "expected a nonnegative integer");
    c.seed = seed.get<std::uint64_t>();
  }
  c.family.seed = c.seed;
  if (has("family")) c.family.kind = guarded("family", [&] { return family_kind_from_string(text(document["family"], "family")); });
  if (has("n_max")) {
    c.family.n_max = integer(document["n_max"], "n_max");
    if (c.family.n_max < 2) throw ConfigError("n_max", "must be >= 2");
  }
  if (has("include_zero")) {
    if (!document["include_zero"].is_boolean()) throw ConfigError("include_zero", "expected a boolean");
    c.family.include_zero = document["include_zero"].get<bool>();
  }
  if (has("convexity_q")) c.convexity_q = positive(document["convexity_q"], "convexity_q");
  if (has("t")) {
    c.t_values = number_list(document["t"], "t");
    for (std::size_t i = 0; i < c.t_values.size(); ++i) {
      if (!(c.t_values[i] >= 0.0)) throw ConfigError(index("t", i), "must be >= 0");
    }
  }
  if (has("k_candidates")) {
    c.k_candidates = number_list(document["k_candidates"], "k_candidates");
    for (std::size_t i = 0; i < c.k_candidates.size(); ++i) {
      if (!(c.k_candidates[i] > 1.0)) throw ConfigError(index("k_candidates", i), "must be > 1");
    }
  }
  if (has("kind")) c.kind = kind_from_string(text(document["kind"], "kind"), "kind");
  if (has("target")) c.target = text(document["target"], "target");
  if (has("output")) c.output_path = text(document["output"], "output");
  if (has("format")) c.format = format_from_string(text(document["format"], "format"), "format");
  if (has("quadrature")) {
    const auto& qd = document["quadrature"];
    require_object(qd, "quadrature");
    if (qd.contains("relative_tolerance")) {
      c.quadrature.relative_tolerance = positive(qd["relative_tolerance"], "quadrature.relative_tolerance");
    }
    if (qd.contains("absolute_floor")) {
      c.quadrature.absolute_floor = positive(qd["absolute_floor"], "quadrature.absolute_floor");
    }
    if (qd.contains("max_subdivisions")) {
      const auto m = integer(qd["max_subdivisions"], "quadrature.max_subdivisions");
      if (m <= 0) throw ConfigError("quadrature.max_subdivisions", "must be positive");
      c.quadrature.max_subdivisions = static_cast<std::size_t>(m);
    }
    if (qd.contains("t_max")) {
      c.quadrature.transform = transform::Truncated{positive(qd["t_max"], "quadrature.t_max")};
    }
  }

  auto need = [&](bool present, const char* key) {
    if (!present) throw ConfigError(key, "required by command " + to_string(c.command));
  };
  switch (c.command) {
    case Command::young_validate:
    case Command::young_complementary:
    case Command::young_nabla2:
      need(c.phi.has_value(), "phi");
      break;
    case Command::norm_orlicz:
      need(c.phi.has_value(), "phi");
      need(c.f.has_value(), "f");
      break;
    case Command::norm_lorentz:
      need(c.p.has_value(), "p");
      need(c.q.has_value(), "q");
      need(c.f.has_value(), "f");
      break;
    case Command::certify:
      need(c.tau.has_value(), "tau");
      need(c.phi.has_value(), "phi");
      need(c.p.has_value(), "p");
      break;
    case Command::demo:
      need(c.kind.has_value(), "kind");
      need(c.p.has_value(), "p");
      if (*c.kind == CounterexampleKind::ex2_3) need(c.q.has_value(), "q");
      break;
    case Command::reproduce_paper: {
      need(!c.target.empty(), "target");
      const auto& targets = reproduce_targets();
      if (std::find(targets.begin(), targets.end(), c.target) == targets.end()) {
        throw ConfigError("target", "unknown target '" + c.target + "'");
      }
      break;
    }
  }
  if (c.format == OutputFormat::both && c.output_path.empty()) {
    throw ConfigError("format", "\"both\" needs an output path for the CSV companion");
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json out = Json::object();
  out["command"] = to_string(c.command);
  if (c.phi) out["phi"] = to_json(*c.phi);
  if (c.f) out["f"] = to_json(*c.f);
  out["space"] = to_json(c.space);
  if (c.tau) out["tau"] = to_json(*c.tau);
  if (c.p) out["p"] = *c.p;
  if (c.q) out["q"] = extended(*c.q);
  if (c.d) out["d"] = *c.d;
  out["family"] = to_string(c.family.kind);
  out["n_max"] = c.family.n_max;
  out["include_zero"] = c.family.include_zero;
  out["convexity_q"] = c.convexity_q;
  if (!c.t_values.empty()) out["t"] = c.t_values;
  if (!c.k_candidates.empty()) out["k_candidates"] = c.k_candidates;
  if (c.kind) out["kind"] = to_string(*c.kind);
  if (!c.target.empty()) out["target"] = c.target;
  if (!c.output_path.empty()) out["output"] = c.output_path;
  out["format"] = to_string(c.format);
  out["seed"] = c.seed;
  Json qd = Json::object();
  qd["relative_tolerance"] = c.quadrature.relative_tolerance;
  qd["absolute_floor"] = c.quadrature.absolute_floor;
  qd["max_subdivisions"] = c.quadrature.max_subdivisions;
  if (const auto* tr = std::get_if<transform::Truncated>(&c.quadrature.transform)) qd["t_max"] = tr->t_max;
  out["quadrature"] = qd;
  return out;
}

Json merge_overrides(Json document, const Json& overrides) {
  if (document.is_null()) document = Json::object();
  if (!document.is_object()) throw ConfigError("", "configuration document must be an object");
  for (auto it = overrides.begin(); it != overrides.end(); ++it) document[it.key()] = it.value();
  return document;
}

}  // namespace orlicz
