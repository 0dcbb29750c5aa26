#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlines::cli {

/// Exit codes: 0 success, 2 invalid input (bad flags, unreadable model,
/// out-of-range parameters), 1 internal error. Results go to `out`; a single
/// diagnostic line goes to `err`.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInvalidInput = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlines::cli
