#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unital {

/// Runs one CLI invocation. Returns the process exit code:
///   0  computed / affirmative verdict
///   1  valid negative verdict (none / false)
///   2  invalid input or precondition failure
///   3  cap exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace unital
