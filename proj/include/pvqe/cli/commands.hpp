#pragma once

#include <iosfwd>

#include "pvqe/cli/config.hpp"

namespace pvqe::cli {

/// Runs a resolved config, writing artifacts under `c.out` and a short report
/// to `log`. Throws ConfigError or NumericalError.
void run_command(const RunConfig& c, std::ostream& log);

/// resolve(), run_command() and the error-to-exit-code mapping: 0 success,
/// 2 usage or config error, 3 numerical failure.
int run_and_report(const RunConfig& c, std::ostream& log, std::ostream& err);

}  // namespace pvqe::cli
