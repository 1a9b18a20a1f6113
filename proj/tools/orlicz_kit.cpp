#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/report.hpp"

namespace {

using orlicz::Json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

Json number_or_string(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return s;
}

// "{...}" is parsed as JSON; "name:a:b" fills the named parameters in order.
Json shorthand(const std::string& text, const std::string& key, const std::string& flag) {
  if (!text.empty() && (text.front() == '{' || text.front() == '"')) {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw orlicz::ConfigError(flag, std::string("invalid JSON: ") + e.what());
    }
  }
  const auto parts = split(text, ':');
  if (parts.empty()) throw orlicz::ConfigError(flag, "empty value");
  Json out = Json::object();
  out[key] = parts[0];
  std::vector<std::string> names;
  if (parts[0] == "power") names = {"p"};
  if (parts[0] == "gauss_power") names = {"p", "q"};
  if (parts[0] == "log_map") names = {"p"};
  if (parts.size() - 1 > names.size()) throw orlicz::ConfigError(flag, "too many parameters in '" + text + "'");
  for (std::size_t i = 1; i < parts.size(); ++i) out[names[i - 1]] = number_or_string(parts[i]);
  return out;
}

Json load_document(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw orlicz::ConfigError("--config", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw orlicz::ConfigError("--config", std::string("invalid JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct Flags {
  std::string config, phi, f, space, tau, p, q, d, family, kind, target, output, format, seed, n_max;
  std::vector<double> t;
  std::vector<double> k;
  bool include_zero = false;
};

void add_common(CLI::App* app, Flags& fl) {
  app->add_option("--config", fl.config, "JSON configuration document");
  app->add_option("--output", fl.output, "Output path (standard output when omitted)");
  app->add_option("--format", fl.format, "json, csv or both");
  app->add_option("--seed", fl.seed, "Seed for random families and corpora");
}

void add_young(CLI::App* app, Flags& fl) {
  app->add_option("--phi", fl.phi, "Young function: JSON or power:P, llogl, exp_minus_one, linear");
  app->add_option("--t", fl.t, "Evaluation points")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz and Lorentz norm toolkit"};
  app.set_version_flag("--version", orlicz::tool_version());
  app.require_subcommand(1);
  Flags fl;
  std::string command;

  auto* young = app.add_subcommand("young", "Young function checks");
  young->require_subcommand(1);
  for (const char* name : {"validate", "complementary", "nabla2"}) {
    auto* sub = young->add_subcommand(name);
    add_common(sub, fl);
    add_young(sub, fl);
    if (std::string(name) == "nabla2") {
      sub->add_option("--k", fl.k, "Candidate constants k > 1")->delimiter(',');
      sub->add_option("--d", fl.d, "Constant d of the Holder quantity");
    }
    sub->callback([&command, name] { command = std::string("young-") + name; });
  }

  auto* norm = app.add_subcommand("norm", "Luxemburg and Lorentz norms");
  norm->require_subcommand(1);
  for (const char* name : {"orlicz", "lorentz"}) {
    auto* sub = norm->add_subcommand(name);
    add_common(sub, fl);
    sub->add_option("--f", fl.f, "Function (JSON)");
    sub->add_option("--space", fl.space, "lebesgue_line, counting_integers or JSON");
    if (std::string(name) == "orlicz") {
      sub->add_option("--phi", fl.phi, "Young function");
    } else {
      sub->add_option("--p", fl.p, "Lorentz exponent p");
      sub->add_option("--q", fl.q, "Lorentz exponent q (number or inf)");
    }
    sub->callback([&command, name] { command = std::string("norm-") + name; });
  }

  auto* certify = app.add_subcommand("certify", "Volume condition for a composition map");
  add_common(certify, fl);
  certify->add_option("--tau", fl.tau, "Map: JSON, identity, gauss_power:P:Q or log_map:P");
  certify->add_option("--phi", fl.phi, "Young function");
  certify->add_option("--p", fl.p, "Exponent p");
  certify->add_option("--d", fl.d, "Check this D instead of searching for the minimal one");
  certify->add_option("--family", fl.family, "blocks, random or dyadic");
  certify->add_option("--n-max", fl.n_max, "Largest block endpoint");
  certify->add_flag("--include-zero", fl.include_zero, "Let families contain 0");
  certify->callback([&command] { command = "certify"; });

  auto* demo = app.add_subcommand("demo", "Counterexample divergence ladders");
  add_common(demo, fl);
  demo->add_option("--kind", fl.kind, "ex1 or ex2_3");
  demo->add_option("--p", fl.p, "Exponent p");
  demo->add_option("--q", fl.q, "Exponent q");
  demo->callback([&command] { command = "demo"; });

  auto* reproduce = app.add_subcommand("reproduce-paper", "Named reproduction targets");
  add_common(reproduce, fl);
  reproduce->add_option("--target", fl.target, "example-1 .. example-4, lemma-layer-cake, lemma-indicators, oneil, "
                                                "nabla2-demo, section-5-demo or all");
  reproduce->add_option("--n-max", fl.n_max, "Largest block endpoint");
  reproduce->callback([&command] { command = "reproduce-paper"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json overrides = Json::object();
    overrides["command"] = command;
    if (!fl.phi.empty()) overrides["phi"] = shorthand(fl.phi, "family", "--phi");
    if (!fl.f.empty()) overrides["f"] = shorthand(fl.f, "family", "--f");
    if (!fl.space.empty()) {
      overrides["space"] = fl.space.front() == '{' ? shorthand(fl.space, "kind", "--space") : Json(fl.space);
    }
    if (!fl.tau.empty()) overrides["tau"] = shorthand(fl.tau, "map", "--tau");
    if (!fl.p.empty()) overrides["p"] = number_or_string(fl.p);
    if (!fl.q.empty()) overrides["q"] = number_or_string(fl.q);
    if (!fl.d.empty()) overrides["d"] = number_or_string(fl.d);
    if (!fl.family.empty()) overrides["family"] = fl.family;
    if (!fl.n_max.empty()) {
      const Json n = number_or_string(fl.n_max);
      overrides["n_max"] = n.is_number() ? Json(static_cast<std::int64_t>(n.get<double>())) : n;
    }
    if (fl.include_zero) overrides["include_zero"] = true;
    if (!fl.kind.empty()) overrides["kind"] = fl.kind;
    if (!fl.target.empty()) overrides["target"] = fl.target;
    if (!fl.output.empty()) overrides["output"] = fl.output;
    if (!fl.format.empty()) overrides["format"] = fl.format;
    if (!fl.seed.empty()) {
      try {
        overrides["seed"] = static_cast<std::uint64_t>(std::stoull(fl.seed));
      } catch (const std::exception&) {
        throw orlicz::ConfigError("--seed", "expected a nonnegative integer");
      }
    }
    if (!fl.t.empty()) overrides["t"] = fl.t;
    if (!fl.k.empty()) overrides["k_candidates"] = fl.k;

    const Json document = orlicz::merge_overrides(load_document(fl.config), overrides);
    const auto config = orlicz::parse_config(document);
    const auto outcome = orlicz::run(config);

    const std::string json_text = outcome.envelope.dump(2) + "\n";
    switch (config.format) {
      case orlicz::OutputFormat::json:
        write_text(config.output_path, json_text);
        break;
      case orlicz::OutputFormat::csv:
        write_text(config.output_path, outcome.csv);
        break;
      case orlicz::OutputFormat::both:
        write_text(config.output_path, json_text);
        write_text(config.output_path + ".csv", outcome.csv);
        break;
    }
    for (const auto& d : outcome.envelope["diagnostics"]) {
      if (d["level"] == "error") std::cerr << "orlicz-kit: " << d["message"].get<std::string>() << "\n";
    }
    return outcome.exit_code;
  } catch (const orlicz::ConfigError& e) {
    std::cerr << "orlicz-kit: configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "orlicz-kit: " << e.what() << "\n";
    return 2;
  }
}
