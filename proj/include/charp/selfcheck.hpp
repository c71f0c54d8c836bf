#pragma once

#include <iosfwd>

namespace charp {

// Runs the ten acceptance checks against the bundled fixtures, printing one
// "PASS <name>" or "FAIL <name>: <detail>" line per check. Returns the
// number of failures.
int run_acceptance(std::ostream& out);

} // namespace charp
