#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowmot {

/// Runs one CLI invocation. Exit codes: 0 computed/verified, 1 failed
/// verification sweep (counterexample in the report), 2 usage or parse error.
/// All reporting goes through the supplied streams, which keeps the command
/// testable in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowmot
