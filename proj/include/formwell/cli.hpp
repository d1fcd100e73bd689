#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace formwell::cli {

/// Runs one CLI invocation. Exit codes: 0 on successful computation (the
/// verification verdict lives in the output, not the code), 2 on usage,
/// parse or validation errors, 3 on internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace formwell::cli
