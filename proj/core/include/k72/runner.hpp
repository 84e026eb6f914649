#pragma once

#include "k72/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace k72 {

// Selector failures (no case matches) and malformed serialized reports.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteSummary {
  long long pass = 0;
  long long flag = 0;
  long long fail = 0;

  long long total() const { return pass + flag + fail; }

  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

// Aggregated run: case reports ordered by id, status counts, wall time.
// Everything except runtime_ms is deterministic for a fixed selector.
struct SuiteReport {
  std::string version;
  std::vector<CaseReport> cases;
  SuiteSummary summary;
  long long runtime_ms = 0;
};

// Executes the cases matched by the selector: "all", an exact case id, or an
// id prefix. Throws UsageError (listing the valid ids) when nothing matches.
SuiteReport run(const std::string& selector);

enum class EmitFormat { Text, Json };

// Renders the report. Text is a human-oriented table; Json is the stable
// machine schema {version, cases, summary, runtime_ms} with every value a
// string (rationals as "p/q", integers as plain decimals).
std::string emit(const SuiteReport& report, EmitFormat format);

// Inverse of emit(..., Json) up to the runtime field being whatever the
// serialized report carried. Throws UsageError on malformed input.
SuiteReport parse_json_report(const std::string& text);

// 0 = no FAIL and (no FLAG or !strict_flags); 2 = FLAG under strict_flags;
// 1 = any FAIL.
int exit_code_for(const SuiteReport& report, bool strict_flags);

// One "id<TAB>anchor" line per registered case, in id order.
std::string list_cases_text();

std::string tool_version();

}  // namespace k72
