#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gadic::app {

enum class Status { Pass, Fail, DiscrepancyExpected };

std::string_view status_name(Status s);

struct NotebookEntry {
  std::string id;
  std::string label;
  std::string citation;
  std::string expected;
  std::string computed;
  std::string gauss;  // the notebook's own (wrong) figure, if any
  Status status;
};

struct NotebookReport {
  int table_version = 0;
  std::vector<NotebookEntry> entries;
  std::size_t passed = 0;  // includes discrepancy-expected entries
  std::size_t failed = 0;
  std::size_t discrepancies = 0;

  bool ok() const { return failed == 0; }
};

struct NotebookOptions {
  // Recompute every value with at least this many digits, then truncate
  // back before comparing. 0 keeps each entry's own precision.
  std::size_t precision_override = 0;
  // Replacement expected literals keyed by entry id.
  std::map<std::string, std::string> expected_overrides;
};

NotebookReport run_notebook(const NotebookOptions& options = {});

std::string render_text(const NotebookReport& report);
std::string render_json_lines(const NotebookReport& report);

/// Reads {"<id>": "<literal>", ...}. Throws ParseError on bad JSON or an
/// unknown id.
std::map<std::string, std::string> parse_expected_overrides(std::string_view json_text);

}  // namespace gadic::app
