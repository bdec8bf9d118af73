#pragma once

#include <ostream>
#include <string>

#include "qstates/app/config.hpp"

namespace qstates::app {

// Each render_* builds the complete CSV text for a command. They throw
// UsageError / DomainError / GridError for bad input and ConvergenceError
// when a solver gives up.

std::string render_eigenstate(const RunConfig& config);
std::string render_bic(const RunConfig& config, bool* residual_ok = nullptr);
std::string render_oldquantum(const RunConfig& config);

/// Spectrum rows are streamed to `out` as they are computed.
void write_spectrum(const RunConfig& config, std::ostream& out);

/// Runs one command end to end, writing to config.out (or `stdout_stream`)
/// and diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& stdout_stream, std::ostream& err);

}  // namespace qstates::app
