#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricdm/error.hpp"
#include "toricdm/problem.hpp"

namespace toricdm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "toricdm-report/1";

struct RunOptions {
  std::string command;  ///< analyze | sectors | lc | grd
  std::string source;   ///< input name echoed in the report
  std::optional<IdealSpec> ideal;  ///< overrides the file's ideal
  std::vector<std::int64_t> socle_radii;
  std::optional<std::int64_t> search_bound;
  std::optional<std::int64_t> box_radius;
  std::optional<std::int64_t> samples_per_class;
  bool timing = false;
};

struct RunResult {
  Json report;
  int exit_code = 0;
};

/// Runs one subcommand. Library errors propagate as Error; a report whose
/// central hypothesis failed comes back with exit code 2.
RunResult run_command(const ProblemFile& problem, const RunOptions& options);

/// Report for a run that raised `e`.
Json error_report(const RunOptions& options, const Error& e);

/// 0 ok, 2 hypothesis failed, 3 bound exceeded, 4 parse or input error, 1 internal.
int exit_code_for(ErrorCode code);

std::string render_machine(const Json& report);
std::string render_human(const Json& report);

}  // namespace toricdm
