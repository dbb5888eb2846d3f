// Named verification suites with deterministic JSON reports: run
// configuration (flags or a flat key=value file), a check registry per
// suite, concurrent execution with single-threaded name-ordered assembly,
// canonicalization for byte comparison (timings stripped), and field-level
// report diffing.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpencil/common.hpp"

namespace qpencil {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string suite = "all";
  int n = 2;          // largest matrix size exercised (2 or 3)
  int degree = 3;     // truncation degree for quotient checks
  std::string mode = "symbolic";  // symbolic | probabilistic
  std::uint64_t seed = 1;         // determines every sampled point
  int workers = 4;                // concurrent check evaluations
  std::string relations_path;     // optional relations file to verify
  std::vector<std::pair<std::string, Rat>> params;  // pinned specializations
  std::string out_path;           // report destination ("" = stdout)
};

// Flat key = value configuration ('#' comments, blank lines ignored).
// Keys: suite, n, degree, mode, seed, workers, relations, out, and
// param.<name> = <rational> for pinned specializations.
RunConfig load_config(const std::string& path);
// One entry as it would appear in the file; throws on unknown keys or
// malformed values.
void set_config_entry(RunConfig& cfg, const std::string& key,
                      const std::string& value);

// The valid suite names, "all" last.
std::vector<std::string> suite_names();

// Executes the suite's checks concurrently (up to cfg.workers) and
// assembles the report single-threaded, ordered by check name.  Throws
// Error for an unknown suite or malformed configuration.  The config echo
// inside the report covers the semantic fields only (not workers/out), so
// reports are byte-comparable across worker counts after canonicalization.
Json run_suite(const RunConfig& cfg);

bool report_all_pass(const Json& report);
// Name of the first failing check in report order ("" when all passed).
std::string first_failure(const Json& report);

// Copy with every volatile field (per-check time_ms) removed: the byte
// comparison canon behind the determinism guarantee.
Json canonical_report(Json report);

struct DiffEntry {
  std::string path;          // e.g. "checks/3/verdict"
  std::string left, right;   // serialized values; "<absent>" when missing
};
// Field-level diff ignoring timings; throws when the suites differ.
std::vector<DiffEntry> diff_reports(const Json& a, const Json& b);

void write_report(const Json& report, const std::string& path);

}  // namespace qpencil
