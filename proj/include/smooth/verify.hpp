#pragma once
#include <ostream>

namespace smooth {

// Runs the full property suite, printing one [PASS]/[FAIL] line per check.
// Returns the number of failed checks.
int run_verify(std::ostream& os);

} // namespace smooth
