#include <cmath>

#include "doctest.h"
#include "orlicz/config.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/report.hpp"

using namespace orlicz;

namespace {

std::string error_path(const Json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<none>";
}

Json lorentz_doc() {
  return Json::parse(R"({
    "command": "norm lorentz",
    "p": 2, "q": 1,
    "f": {"family": "indicator", "set": {"intervals": [[0, 4]]}}
  })");
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("commands and defaults") {
    const auto c = parse_config(lorentz_doc());
    CHECK(c.command == Command::norm_lorentz);
    CHECK(c.space == MeasureSpace::lebesgue_line());
    CHECK(c.format == OutputFormat::json);
    CHECK(c.seed == 42);
    CHECK(*c.q == 1.0);
    CHECK(parse_config(Json{{"command", "reproduce_paper"}, {"target", "all"}}).command == Command::reproduce_paper);
    CHECK(parse_config(Json{{"command", "young-validate"}, {"phi", {{"family", "llogl"}}}}).command ==
          Command::young_validate);
  }

  TEST_CASE("extended reals") {
    CHECK(std::isinf(parse_extended("inf", "q")));
    CHECK(parse_extended("-inf", "q") < 0);
    CHECK(parse_extended(2.5, "q") == 2.5);
    CHECK_THROWS_AS(parse_extended("many", "q"), ConfigError);
    CHECK(extended(kInfinity) == "inf");
    CHECK(extended(1.5) == 1.5);
    auto doc = lorentz_doc();
    doc["q"] = "inf";
    CHECK(std::isinf(*parse_config(doc).q));
  }

  TEST_CASE("error paths") {
    auto doc = lorentz_doc();
    doc["q"] = -1;
    CHECK(error_path(doc) == "q");
    doc = lorentz_doc();
    doc.erase("f");
    CHECK(error_path(doc) == "f");
    doc = lorentz_doc();
    doc["f"]["set"]["intervals"][0] = Json::array({3, 1});
    CHECK(error_path(doc) == "f.set.intervals[0]");
    doc = lorentz_doc();
    doc["f"]["family"] = "wavelet";
    CHECK(error_path(doc) == "f.family");
    CHECK(error_path(Json{{"command", "fly"}}) == "command");
    CHECK(error_path(Json::array()) == "");
    CHECK(error_path(Json{{"command", "young validate"}, {"phi", {{"family", "power"}, {"p", -1}}}}) == "phi.p");
    CHECK(error_path(Json{{"command", "young validate"}, {"phi", {{"family", "power"}}}}) == "phi.p");
    CHECK(error_path(Json{{"command", "reproduce-paper"}, {"target", "everything"}}) == "target");
    CHECK(error_path(Json{{"command", "reproduce-paper"}, {"target", "all"}, {"format", "both"}}) == "format");
    CHECK(error_path(Json{{"command", "reproduce-paper"}, {"target", "all"}, {"format", "xml"}}) == "format");
    CHECK(error_path(Json{{"command", "reproduce-paper"}, {"target", "all"}, {"seed", -3}}) == "seed");
    const Json certify = Json::parse(R"({"command": "certify", "tau": {"map": "identity"},
      "phi": {"family": "power", "p": 2}, "p": 2, "d": 0.5})");
    CHECK(error_path(certify) == "d");
    auto bad_tau = certify;
    bad_tau["d"] = 1;
    bad_tau["tau"] = Json{{"map", "log_map"}, {"p", 0.5}};
    CHECK(error_path(bad_tau) == "tau.p");
    auto bad_n = certify;
    bad_n.erase("d");
    bad_n["n_max"] = 1;
    CHECK(error_path(bad_n) == "n_max");
    const Json demo = Json::parse(R"({"command": "demo", "kind": "ex2_3", "p": 2})");
    CHECK(error_path(demo) == "q");
    CHECK(error_path(Json{{"command", "norm orlicz"},
                          {"phi", {{"family", "llogl"}}},
                          {"f", {{"family", "radial_power"}, {"gamma", -1}, {"radius", 1}}}}) == "f.gamma");
    CHECK(error_path(Json{{"command", "norm orlicz"},
                          {"phi", {{"family", "llogl"}}},
                          {"space", {{"kind", "counting_finite"}, {"size", 0}}},
                          {"f", {{"family", "power_log_decay"}, {"p", 1}, {"r", 1}}}}) == "space.size");
  }

  TEST_CASE("round trip") {
    const std::vector<Json> docs = {
        lorentz_doc(),
        Json::parse(R"({"command": "certify", "tau": {"map": "orlicz_inverse", "phi": {"family": "llogl"}, "p": 1},
          "phi": {"family": "llogl"}, "p": 1, "family": "random", "seed": 9, "include_zero": true})"),
        Json::parse(R"({"command": "norm orlicz", "phi": {"family": "power_composed", "base": {"family": "power", "p": 3}, "q": 2},
          "space": "counting_integers",
          "f": {"family": "simple", "pieces": [{"set": {"integers": [1, 2]}, "value": -1.5}]},
          "quadrature": {"relative_tolerance": 1e-9, "t_max": 100}})"),
        Json::parse(R"({"command": "young nabla2", "phi": {"family": "tabulated", "knots": [[0, 0], [1, 1], [2, 4]]},
          "k_candidates": [2, 3]})"),
        Json::parse(R"({"command": "norm lorentz", "p": 1, "q": "inf",
          "f": {"family": "composed", "tau": {"map": "gauss_power", "p": 2, "q": 1},
                "inner": {"family": "power_log_decay", "p": 2, "r": 1}}})"),
    };
    for (const auto& doc : docs) {
      const auto once = config_to_json(parse_config(doc));
      const auto twice = config_to_json(parse_config(once));
      CHECK(once == twice);
    }
  }

  TEST_CASE("merge overrides") {
    const auto merged = merge_overrides(lorentz_doc(), Json{{"p", 3}, {"format", "csv"}});
    CHECK(merged["p"] == 3);
    CHECK(merged["format"] == "csv");
    CHECK(merged["q"] == 1);
  }

  TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(kInfinity) == "inf");
    CHECK(format_number(-kInfinity) == "-inf");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("tables") {
    Table t;
    t.columns = {"a", "b", "c"};
    t.add({1.5, "x", true});
    t.add({extended(kInfinity), 2, false});
    CHECK(t.to_csv() == "a,b,c\n1.5,x,true\ninf,2,false\n");
    const auto j = t.to_json();
    REQUIRE(j.is_array());
    CHECK(j[0]["b"] == "x");
    CHECK_THROWS_AS(t.add({1}), ArgumentError);
  }

  TEST_CASE("run envelopes and exit codes") {
    const auto ok = run(parse_config(lorentz_doc()));
    CHECK(ok.exit_code == 0);
    CHECK(ok.envelope.contains("tool_version"));
    CHECK(ok.envelope.contains("config_echo"));
    CHECK(ok.envelope.contains("results"));
    CHECK(ok.envelope.contains("diagnostics"));
    const auto fail = run(parse_config(Json::parse(R"({"command": "certify", "tau": {"map": "gauss_power", "p": 1, "q": 2},
      "phi": {"family": "power", "p": 2}, "p": 1, "n_max": 200})")));
    CHECK(fail.exit_code == 1);
    const auto error = run(parse_config(Json::parse(R"({"command": "demo", "kind": "ex1", "p": 2})")));
    CHECK(error.exit_code == 2);
    REQUIRE(error.envelope["diagnostics"].is_array());
    CHECK(error.envelope["diagnostics"][0]["level"] == "error");
  }

  TEST_CASE("runs are deterministic") {
    const auto doc = Json::parse(R"({"command": "certify", "tau": {"map": "orlicz_inverse", "phi": {"family": "llogl"}, "p": 1},
      "phi": {"family": "llogl"}, "p": 1, "family": "random", "seed": 5})");
    const auto a = run(parse_config(doc));
    const auto b = run(parse_config(doc));
    CHECK(a.envelope.dump() == b.envelope.dump());
    CHECK(a.csv == b.csv);
  }

  TEST_CASE("example-2 verdicts") {
    RunConfig c;
    c.family.n_max = 300;
    const auto r = reproduce_target("example-2", c);
    REQUIRE(r.table.rows.size() == 3);
    CHECK(r.table.rows[0][5] == true);
    CHECK(r.table.rows[1][5] == true);
    CHECK(r.table.rows[2][5] == false);
    CHECK(r.passed);
    CHECK_THROWS_AS(reproduce_target("example-9", c), ArgumentError);
  }
}
