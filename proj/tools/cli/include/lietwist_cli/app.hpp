// Command dispatch for the lietwist executable.

#ifndef LIETWIST_CLI_APP_HPP_
#define LIETWIST_CLI_APP_HPP_

#include <ostream>

#include "lietwist_cli/problem.hpp"

namespace lietwist::cli {

// Result payload for a validated problem (no timing); throws lietwist::Error.
json execute(const ProblemDocument& problem);

// Full output document: {"problem", "result", "diagnostics"}.
json result_document(const ProblemDocument& problem);

// Exit codes: 0 success, 1 domain error (JSON error record on `out`), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lietwist::cli

#endif
