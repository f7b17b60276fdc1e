#ifndef LEXISTAT_CLI_HPP
#define LEXISTAT_CLI_HPP

#include <iosfwd>

namespace lexistat {

/// Full command-line surface: analyze, rank, table-demo, compare, merge,
/// curves. Data goes to `out` (or --output), diagnostics to `err`.
/// Returns 0 iff no error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexistat

#endif
