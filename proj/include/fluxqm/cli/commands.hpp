#pragma once

#include <span>
#include <string_view>

#include "fluxqm/cli/config.hpp"
#include "fluxqm/cli/output.hpp"

namespace fluxqm::cli {

struct RunResult {
    Table table;
    int failed_points = 0;  // rows flagged with a numeric failure
};

std::span<const std::string_view> command_names();

/// Runs `command` over the configured scan with `jobs` workers. Rows come
/// back in scan order whatever the worker count. Throws UsageError on an
/// invalid configuration.
RunResult run_command(std::string_view command, const RunConfig& config, int jobs);

/// 0 when every point succeeded, 1 otherwise.
int exit_status(const RunResult& result);

}  // namespace fluxqm::cli
