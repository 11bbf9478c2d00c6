#pragma once

#include <ostream>

namespace pbmo::cli {

// Exit status: 0 success, 1 domain error, 2 a must-match claim failed.
// Command-line syntax errors use CLI11's own nonzero codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_claim_failed = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbmo::cli
