#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ltc {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;  // not completable, not an obstruction, gaps found, ...
inline constexpr int exit_usage = 2;     // bad flags, unreadable or malformed input

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ltc
