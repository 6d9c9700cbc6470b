#ifndef MINSMC_GREEDY_HPP_
#define MINSMC_GREEDY_HPP_

#include <span>

#include "minsmc/coverage.hpp"
#include "minsmc/ledger.hpp"
#include "minsmc/oracle.hpp"
#include "minsmc/solution.hpp"

namespace minsmc {

// Sequential greedy: repeatedly add argmax_v g_B(v)/c(v) until g(B) ≥ k.
// Ties break on larger gain, then smaller id. Each iteration is one adaptive
// round (one batch of marginals over the remaining elements), so the round
// count equals the iteration count exactly. Guarantees
// c(B) ≤ H(min{Δ,k})·OPT.
Solution greedy_solve(const CoverageInstance& inst, QueryLedger& ledger);

// Greedy over an arbitrary oracle view, continuing from a partial selection.
// Used both by greedy_solve and as the loop-exhaustion fallback of the
// parallel solver. Appends to `base` until g ≥ demand.
IdSet greedy_extend(const TruncatedOracle& g, std::span<const ElementId> ground,
                    std::span<const double> costs_by_id, const IdSet& base);

// True iff a beats b under the greedy order for ratios gain/cost:
// (ratio desc, gain desc, id asc). Cross-multiplied, no division.
bool greedy_prefers(std::int64_t gain_a, double cost_a, ElementId a,
                    std::int64_t gain_b, double cost_b, ElementId b);

}  // namespace minsmc

#endif  // MINSMC_GREEDY_HPP_
