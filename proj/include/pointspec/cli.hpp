#pragma once

#include <iosfwd>

namespace pointspec::cli {

/// Exit codes: 0 success (including empty spectra), 1 usage or configuration
/// error, 2 validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Entry point of the `pointspec` tool. Results go to `out` (or the configured
/// output file), diagnostics to `err` subject to PS_LOG = quiet | info | debug.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pointspec::cli
