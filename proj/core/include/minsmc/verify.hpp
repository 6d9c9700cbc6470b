#ifndef MINSMC_VERIFY_HPP_
#define MINSMC_VERIFY_HPP_

#include <string>
#include <vector>

#include "minsmc/coverage.hpp"
#include "minsmc/solution.hpp"

namespace minsmc {

// Independent recheck of a solution against a fresh oracle. Reports
// failures, never throws.
struct CheckReport {
  bool feasible = false;          // g(chosen) ≥ k
  bool achieved_matches = false;  // stored achieved == recomputed g(chosen)
  bool cost_matches = false;      // stored cost == recomputed, |Δ| ≤ 1e-9
  bool ids_valid = false;
  std::int64_t recomputed_achieved = 0;
  double recomputed_cost = 0.0;
  std::vector<std::string> messages;

  bool all_ok() const {
    return feasible && achieved_matches && cost_matches && ids_valid;
  }
};

CheckReport verify_solution(const CoverageInstance& inst, const Solution& sol);

}  // namespace minsmc

#endif  // MINSMC_VERIFY_HPP_
