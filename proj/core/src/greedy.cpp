#include "minsmc/greedy.hpp"

#include <algorithm>

namespace minsmc {

bool greedy_prefers(std::int64_t gain_a, double cost_a, ElementId a,
                    std::int64_t gain_b, double cost_b, ElementId b) {
  // gain_a/cost_a vs gain_b/cost_b, cross-multiplied (costs > 0).
  const double lhs = static_cast<double>(gain_a) * cost_b;
  const double rhs = static_cast<double>(gain_b) * cost_a;
  if (lhs != rhs) return lhs > rhs;
  if (gain_a != gain_b) return gain_a > gain_b;
  return a < b;
}

IdSet greedy_extend(const TruncatedOracle& g,
                    std::span<const ElementId> ground,
                    std::span<const double> costs_by_id, const IdSet& base) {
  IdSet chosen(base);
  IdSet remaining;
  remaining.reserve(ground.size());
  for (ElementId v : ground) {
    if (!std::binary_search(chosen.begin(), chosen.end(), v)) {
      remaining.push_back(v);
    }
  }

  while (!remaining.empty()) {
    const BatchMarginals batch = batch_marginals(g, chosen, remaining);
    if (batch.base >= g.demand()) break;

    std::size_t best = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (batch.gains[i] <= 0) continue;
      if (best == remaining.size() ||
          greedy_prefers(batch.gains[i], costs_by_id[remaining[i]],
                         remaining[i], batch.gains[best],
                         costs_by_id[remaining[best]], remaining[best])) {
        best = i;
      }
    }
    if (best == remaining.size()) {
      // No positive gain left; unreachable when demand ≤ g(ground).
      throw InfeasibleDemandError(
          "greedy stalled: demand exceeds reachable value");
    }
    const ElementId pick = remaining[best];
    chosen.insert(std::lower_bound(chosen.begin(), chosen.end(), pick), pick);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    if (batch.base + batch.gains[best] >= g.demand()) break;
  }
  return chosen;
}

Solution greedy_solve(const CoverageInstance& inst, QueryLedger& ledger) {
  if (inst.k() > inst.total_value()) {
    throw InfeasibleDemandError("infeasible demand: k exceeds f(V)");
  }

  Solution sol;
  sol.algorithm = Algo::kGreedy;
  if (inst.k() == 0) return sol;

  TruncatedOracle g(inst.oracle(), inst.k(), ledger);
  sol.chosen = greedy_extend(g, inst.all_ids(), inst.costs(), {});
  sol.total_cost = inst.cost_of(sol.chosen);
  sol.achieved = std::min(inst.f_value(sol.chosen), inst.k());
  return sol;
}

}  // namespace minsmc
