#pragma once

#include <ostream>

#include <georag/config.hpp>

namespace georag::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 1,
    kDataError = 2,
    kTransportError = 3,
};

/// Parses argv and runs one subcommand (ingest / ask / eval / ablate /
/// reindex / config). All output goes to the supplied streams so tests can
/// capture it. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace georag::cli
