#ifndef MINSMC_EXACT_HPP_
#define MINSMC_EXACT_HPP_

#include "minsmc/coverage.hpp"
#include "minsmc/solution.hpp"

namespace minsmc {

// Exhaustive minimum: cheapest A with g(A) ≥ k, ties broken by the
// lexicographically smallest id set. Depth-first include/exclude enumeration
// with cost and residual-coverage pruning; semantics are plain enumeration.
// Refuses instances with m > subset_limit.
Solution exact_solve(const CoverageInstance& inst, int subset_limit = 24);

}  // namespace minsmc

#endif  // MINSMC_EXACT_HPP_
