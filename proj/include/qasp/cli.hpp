// SPDX-License-Identifier: MIT
#ifndef QASP_CLI_HPP
#define QASP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qasp::cli {

enum ExitCode : int {
    ok = 0,
    input_error = 1, // parse, safety and validation errors, bad usage
    resource_error = 2,
    mismatch = 3, // a benchmark row disagrees with its expected values
};

/// Runs one invocation. `args` excludes the program name. Input named "-"
/// is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace qasp::cli

#endif
