#ifndef MINSMC_MINSMC_HPP_
#define MINSMC_MINSMC_HPP_

#include <cstdint>
#include <span>

#include "minsmc/coverage.hpp"
#include "minsmc/ledger.hpp"
#include "minsmc/oracle.hpp"
#include "minsmc/report.hpp"
#include "minsmc/solution.hpp"

namespace minsmc {

struct SolveOutcome {
  Solution solution;
  RunReport report;
};

// Cost-window preprocessing: with elements indexed by increasing cost and j
// the least index with g({v_1..v_j}) ≥ k, splits V into
//   V0   = {v : c(v) < (ε/(m·k))·c(v_j)}   (negligibly cheap, always taken)
//   V1   = {v : c(v) > j·c(v_j)}           (too expensive for any optimum)
//   Vmod = the rest, with cost spread ≤ j·m·k/ε ≤ m²·k/ε
// and reduces the demand to k_mod = max(0, k − g(V0)). Two adaptive rounds:
// the prefix scan and the g(V0) evaluation.
struct PreprocessResult {
  std::size_t j = 0;  // 1-based pivot index in cost order
  double pivot_cost = 0.0;
  IdSet v0;
  IdSet v1;
  IdSet vmod;
  std::int64_t k_mod = 0;
  std::int64_t g_v0 = 0;
};

PreprocessResult preprocess(const CoverageInstance& inst, double epsilon,
                            QueryLedger& ledger);

// Bucketed parallel solver over an oracle view. `f` is the untruncated
// oracle (truncated internally at `demand`); `ground` lists selectable ids;
// costs are indexed by id. Reports rounds/queries through `ledger` and
// instrumentation through `report`.
IdSet minsmc_par_view(const SetFunctionOracle& f,
                      std::span<const ElementId> ground,
                      std::span<const double> costs_by_id, std::int64_t demand,
                      double epsilon, std::uint64_t seed, QueryLedger& ledger,
                      RunReport& report);

// The bucketed solver on a raw instance.
SolveOutcome minsmc_par(const CoverageInstance& inst, double epsilon,
                        std::uint64_t seed);

// Preprocessing + bucketed solve on the moderate-cost residual; the returned
// set is B_mod ∪ V0. When k_mod = 0 the base alone is returned and the
// parallel stage is skipped.
SolveOutcome minsmc_main(const CoverageInstance& inst, double epsilon,
                         std::uint64_t seed);

// Generic core of minsmc_main for arbitrary oracles (the k_mod = 0 branch is
// unreachable for coverage, where f(∅) = 0).
SolveOutcome minsmc_main_view(const SetFunctionOracle& f,
                              std::span<const double> costs_by_id,
                              std::int64_t demand, double epsilon,
                              std::uint64_t seed);

void validate_epsilon(double epsilon);

}  // namespace minsmc

#endif  // MINSMC_MINSMC_HPP_
