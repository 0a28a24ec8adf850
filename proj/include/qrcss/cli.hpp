#pragma once

#include <iosfwd>

namespace qrcss {

/// Command-line front end; returns the process exit code.
/// 0 success, 1 usage error, 2 verification failure, 3 budget exhausted
/// without certification (or no seam found).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrcss
