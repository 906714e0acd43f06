#pragma once

#include <iosfwd>

namespace rhcmp {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitUsage = 64;

// Parses argv and runs one subcommand. Tables go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rhcmp
