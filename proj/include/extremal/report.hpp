#pragma once

#include "extremal/measures.hpp"
#include "extremal/shifting.hpp"
#include "extremal/verify.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace extremal {

using Json = nlohmann::ordered_json;

/// Everything needed to rerun a report-producing command.
struct RunConfig {
    std::string command;                       // "verify" or "search"
    std::map<std::string, std::string> params; // command-specific settings
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;                  // 0: default_budget()
    std::string output;                        // report path, empty for stdout
    std::string format = "json";               // json | csv | text
};

Json to_json(const RunConfig & config);
RunConfig run_config_from_json(const Json & j);

Json to_json(const SetFamily & family);
SetFamily family_from_json(const Json & j);

/// Integers as numbers, other values as "p/q" strings.
Json to_json(const Params & params);
Params params_from_json(const Json & j);

Json to_json(const Instance & instance);
Instance instance_from_json(const Json & j);

Json to_json(const MeasureProfile & profile);
Json to_json(const ShiftTrace & trace);
Json to_json(const SearchResult & result);

/// Verdict, detail and instance; timing is left to the caller.
Json to_json(const StatementReport & report);
Json to_json(const SweepReport & report);

/// A finished command: the report (without timing), wall-clock data kept
/// apart so reruns can be compared exactly, and the process exit code.
struct Outcome {
    Json report;
    Json timing;
    int exit_code = 0; // 0 ok, 1 FAIL found
};

/// Runs a verify or search configuration. Throws std::invalid_argument for
/// malformed configurations and BudgetExceeded when a sweep is refused.
Outcome execute(const RunConfig & config, unsigned threads = 0);

/// The full document written for an outcome: report fields, then
/// "config" and "timing".
Json report_document(const Outcome & outcome, const RunConfig & config);

/// Rows of (key, value) strings for CSV and text output; rationals stay "p/q".
std::vector<std::pair<std::string, std::string>> summary_rows(const Json & report);

} // namespace extremal
