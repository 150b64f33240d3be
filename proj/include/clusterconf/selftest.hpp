#pragma once

#include <iosfwd>

namespace clusterconf {

// Cross-module invariant suite behind the `selftest` CLI command: one line
// per check plus a summary. Checks run concurrently but results are printed
// in a fixed order, so output is byte-identical for any thread count. The
// seed feeds the randomized property checks. Returns the number of failures.
int run_selftest(std::ostream& out, int threads, unsigned seed = 12345);

} // namespace clusterconf
