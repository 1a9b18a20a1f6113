#pragma once

#include <string>
#include <vector>

#include "orlicz/config.hpp"

namespace orlicz {

/// Column-ordered table serialized both as a JSON array of rows and as CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add(std::vector<Json> row);
  Json to_json() const;
  /// Comma separated, '.' decimal, LF line endings, header row first.
  std::string to_csv() const;
};

/// Shortest round-trip decimal form; "inf" / "-inf" / "nan" otherwise.
std::string format_number(double value);

struct Diagnostic {
  std::string level;
  std::string message;
};

struct RunOutcome {
  /// {tool_version, config_echo, results, diagnostics}
  Json envelope;
  /// 0 pass, 1 fail verdict, 2 error.
  int exit_code = 0;
  std::string csv;
};

RunOutcome run(const RunConfig& config);

/// Named targets accepted by reproduce-paper, "all" excluded.
const std::vector<std::string>& paper_targets();

struct TargetResult {
  Json body;
  Table table;
  bool passed = false;
};

/// One reproduce-paper target. Throws ArgumentError for an unknown name.
TargetResult reproduce_target(const std::string& target, const RunConfig& config);

std::string tool_version();

}  // namespace orlicz
