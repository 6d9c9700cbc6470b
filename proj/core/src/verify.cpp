#include "minsmc/verify.hpp"

#include <cmath>

namespace minsmc {

CheckReport verify_solution(const CoverageInstance& inst,
                            const Solution& sol) {
  CheckReport report;

  report.ids_valid = true;
  for (ElementId v : sol.chosen) {
    if (v >= inst.m()) {
      report.ids_valid = false;
      report.messages.push_back("element id out of range: " +
                                std::to_string(v));
    }
  }
  if (!report.ids_valid) return report;

  report.recomputed_achieved =
      std::min(inst.f_value(sol.chosen), inst.k());
  report.recomputed_cost = inst.cost_of(sol.chosen);

  report.feasible = report.recomputed_achieved >= inst.k();
  if (!report.feasible) {
    report.messages.push_back("infeasible: g(chosen) < k");
  }
  report.achieved_matches = report.recomputed_achieved == sol.achieved;
  if (!report.achieved_matches) {
    report.messages.push_back("achieved mismatch: stored " +
                              std::to_string(sol.achieved) + ", recomputed " +
                              std::to_string(report.recomputed_achieved));
  }
  report.cost_matches =
      std::abs(report.recomputed_cost - sol.total_cost) <= 1e-9;
  if (!report.cost_matches) {
    report.messages.push_back("cost mismatch beyond 1e-9");
  }
  return report;
}

}  // namespace minsmc
