#pragma once

#include <string>
#include <vector>

namespace qrc {

enum class CheckStatus { Pass, Fail, Adjudicated };
const char* check_status_name(CheckStatus s);  // "pass" / "fail" / "adjudicated"

// One verification check.  For value checks, `expected` is the frozen value
// and `computed` the library's; pass requires byte equality.  For law
// checks, both fields carry the same "holds ..." sentence on success and
// `computed` describes the first violation on failure.  `citation` names
// the dataset or law each expectation was taken from.  Adjudicated entries
// record a stored value that the exact computation contradicts, together
// with the resolved count; they are failures only in strict mode and only
// when no resolution was reached (`unresolved`).
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  std::string expected;
  std::string computed;
  std::string citation;
  bool unresolved = false;
};

struct VerifyConfig {
  long precisionBits = 256;  // oracle working precision
  long productBudget = 200;  // degree-product cap for oracle-backed checks
};

struct ReportDocument {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  long passCount = 0;
  long failCount = 0;
  long adjudicatedCount = 0;
  std::string toolVersion;
  std::string configEcho;
};

// Suite names in canonical order: counts, limbs, polys, intersections, all.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& s);

// Runs every check of one suite ("all" = union of the other four) and
// assembles the report, sorted by check id.  A check that throws is
// reported as a failure; run_suite itself throws std::domain_error only
// for an unknown suite name.
ReportDocument run_suite(const std::string& suite, const VerifyConfig& config = {});

// Hard failure: any check with status fail.  Unresolved adjudication: an
// adjudicated check whose conflict no route could resolve (strict mode
// treats only these as errors).
bool has_hard_failure(const ReportDocument& doc);
bool has_unresolved_adjudication(const ReportDocument& doc);

// Deterministic renderings: fixed key order, locale-independent, newline
// terminated.  Identical documents render to identical bytes.
std::string report_json(const ReportDocument& doc);
std::string report_csv(const ReportDocument& doc);
std::string report_md(const ReportDocument& doc);

const char* tool_version();

}  // namespace qrc
