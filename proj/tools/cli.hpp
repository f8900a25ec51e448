#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binent::cli {

// 17 significant digits, shortest general form, locale-free: doubles
// round-trip exactly through the printed text.
std::string format_double(double value);

// Parses and dispatches one invocation; args excludes the program name.
// Results go to out, diagnostics to err. Returns the process exit code:
// 0 success, 1 usage error, 2 domain error, 3 solver non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binent::cli
