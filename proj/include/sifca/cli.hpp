#pragma once

#include <iosfwd>

namespace sifca {

/// Exit codes: 0 ok, 1 input error, 2 valid input but infeasible (ca) or
/// failed checks (validate).
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInfeasible = 2 };

/// Parses argv and runs one command. Output that is not redirected with
/// --out goes to `out`; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sifca
