#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orlicz/composition.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/quadrature.hpp"
#include "orlicz/tau.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

using Json = nlohmann::ordered_json;

enum class Command {
  young_validate,
  young_complementary,
  young_nabla2,
  norm_orlicz,
  norm_lorentz,
  certify,
  demo,
  reproduce_paper,
};

enum class OutputFormat { json, csv, both };

std::string to_string(Command command);
std::string to_string(OutputFormat format);
std::string to_string(CounterexampleKind kind);

/// A fully validated run request. Fields not used by the command stay empty.
struct RunConfig {
  Command command = Command::reproduce_paper;
  std::optional<YoungFunction> phi;
  std::optional<FunctionSpec> f;
  MeasureSpace space = MeasureSpace::lebesgue_line();
  std::optional<TauMap> tau;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> d;
  FamilyOptions family;
  /// Exponent q with phi((.)^{1/q}) required to be a Young function (certify).
  double convexity_q = 1.0;
  std::vector<double> t_values;
  std::vector<double> k_candidates;
  std::optional<CounterexampleKind> kind;
  std::string target;
  std::string output_path;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 42;
  QuadratureSettings quadrature;
};

/// Extended reals: finite numbers stay numbers, infinities become "inf" / "-inf".
Json extended(double value);
/// Inverse of `extended`; accepts numbers and the strings "inf", "+inf", "-inf".
double parse_extended(const Json& value, const std::string& path);

YoungFunction parse_young(const Json& doc, const std::string& path = "phi");
Json to_json(const YoungFunction& phi);

MeasurableSet parse_set(const Json& doc, const std::string& path = "set");
Json to_json(const MeasurableSet& set);

MeasureSpace parse_space(const Json& doc, const std::string& path = "space");
Json to_json(const MeasureSpace& space);

TauMap parse_tau(const Json& doc, const std::string& path = "tau");
Json to_json(const TauMap& tau);

FunctionSpec parse_function(const Json& doc, const std::string& path = "f");
Json to_json(const FunctionSpec& f);

/// Validates the document against the shared grammar. Throws ConfigError
/// carrying the offending field path.
RunConfig parse_config(const Json& document);

/// Canonical document; parse_config(config_to_json(c)) reproduces c.
Json config_to_json(const RunConfig& config);

/// Copies every key of `overrides` into `document` (inline flags win).
Json merge_overrides(Json document, const Json& overrides);

}  // namespace orlicz
