#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontlab/config.hpp"

/// Scenario execution: turns a parsed config into an archive directory
/// (config echo, positions/snapshots/diagnostics/verdicts CSV, SVG plots)
/// plus an in-memory summary. The full key schema is documented in the
/// repository README; presets/ contains one config per acceptance scenario.
namespace frontlab {

/// One checked claim. `metric` names a diagnostics entry, `criterion` the
/// scenario-level label it belongs to (echoed into verdicts.csv).
struct Verdict {
    std::string name;
    std::string criterion;
    std::string metric;
    double measured = 0.0;
    bool pass = false;
    std::string condition;  ///< human-readable bound that was applied
};

struct RunArchive {
    std::string scenario;
    std::string out_dir;  ///< empty when no files were requested
    /// Every diagnostic value computed for the run, keyed like
    /// "speed.past.value"; written to diagnostics.csv in sorted order.
    std::map<std::string, double> summary;
    std::vector<Verdict> verdicts;
    double wall_seconds = 0.0;  ///< kept out of the deterministic CSVs
    std::string error;          ///< nonempty when the run aborted

    bool all_pass() const;
};

/// Executes one scenario. Configuration or validation problems throw
/// ConfigError before any compute; solver aborts are caught and reported
/// through `error` with the partial archive written out.
RunArchive run_scenario(const KeyValueConfig& cfg);

/// Checks a scenario without running it: full key resolution (unknown keys
/// rejected), parameter validation, and the reaction invariant checks.
/// Returns a human-readable report; throws on any problem.
std::string validate_scenario(const KeyValueConfig& cfg);

struct SuiteRow {
    std::string config_path;
    std::string scenario;
    bool pass = false;
    double seconds = 0.0;
    std::string error;
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    double total_seconds = 0.0;

    bool all_pass() const;
    /// One line per scenario plus a footer, fixed-width columns.
    std::string table() const;
};

/// Runs the listed configs with at most `jobs` scenarios in flight.
/// Scenario failures (including exceptions) mark their row failed without
/// aborting the rest.
SuiteResult run_suite(const std::vector<std::string>& config_paths, int jobs);

/// Reads a suite file: one config path per line, relative paths resolved
/// against the suite file's directory, `#` comments allowed.
std::vector<std::string> read_suite_file(const std::string& path);

}  // namespace frontlab
