#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gerst::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 clean, 1 violations or witnesses found, 2 malformed input or usage.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gerst::cli
