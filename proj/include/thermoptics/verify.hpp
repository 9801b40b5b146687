#pragma once

#include <iosfwd>

namespace thermoptics {

enum class VerifyLevel { Fast, Full };

// Runs the cross-module invariant checks, printing one line per group.
// Returns true iff every group passes. Full adds exact-diagonalization
// convergence runs up to 10 sites.
bool run_verification(VerifyLevel level, std::ostream& os);

}  // namespace thermoptics
