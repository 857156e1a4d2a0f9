#pragma once

#include <iosfwd>

namespace pairclust::cli {

/// Runs one `pairclust` invocation. Returns 0 on success, 1 on a usage
/// error and 2 on a data error. Data goes to `out` (or --output files),
/// diagnostics to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace pairclust::cli
