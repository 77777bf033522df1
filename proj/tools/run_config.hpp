#pragma once

// Command-line and config-file handling for the quenchlab tool.
//
//   quenchlab <verify|sweep|peaks|collapse>
//     [--observable chi-f|riw|energy] [--method sum|integral|elliptic]
//     [--n 128,256,...] [--lambda-min a --lambda-max b --lambda-count c]
//     [--nu 1.0] [--out path] [--format csv|json] [--config path]
//     [--tolerance t] [--window w] [--workers k]
//
// A config file holds one key=value pair per line (keys are the long option
// names without the leading dashes); command-line flags win on conflict.
// QUENCHLAB_WORKERS overrides the default pool size, the --workers flag
// overrides both.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quenchlab/observables.hpp"

namespace quenchlab::cli {

enum class Command { verify, sweep, peaks, collapse };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::verify;
    std::optional<Observable> observable;  // unset: command-dependent default
    Method method = Method::mode_sum;
    std::vector<int> n_list;

    // Either a uniform grid or an explicit list (the verify default matrix).
    double lambda_min = 0.8;
    double lambda_max = 1.2;
    int lambda_count = 2001;
    std::vector<double> lambda_list;  // non-empty: overrides the grid

    double nu = 1.0;
    double tolerance = 1e-9;
    double window = 2.0;
    std::string out_path = "-";  // "-" writes to stdout
    OutputFormat format = OutputFormat::csv;
    std::size_t workers = 1;

    /// Materialized lambda grid, strictly increasing.
    std::vector<double> lambdas() const;

    /// Observables this run covers (peaks/collapse default to both).
    std::vector<Observable> observables() const;

    /// Echoed into output headers; excludes anything (worker count, config
    /// path) that may differ between byte-identical runs.
    std::vector<std::string> header_lines() const;
};

/// Exit codes fixed by the interface contract.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
};

std::string usage();

/// Parse argv (plus an optional --config file) into a validated RunConfig.
/// Throws ConfigError on any malformed or inconsistent input. A --help
/// request prints usage and returns std::nullopt.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv);

}  // namespace quenchlab::cli
