#ifndef MINSMC_REPORT_HPP_
#define MINSMC_REPORT_HPP_

#include <cstdint>
#include <optional>

#include "minsmc/nis.hpp"
#include "minsmc/params.hpp"
#include "minsmc/solution.hpp"

namespace minsmc {

// Per-run metrics. rounds/queries mirror the ledger snapshot at completion.
struct RunReport {
  Algo algorithm = Algo::kMinsmcMain;
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;
  std::uint64_t queries = 0;
  double wall_ms = 0.0;
  double cost = 0.0;
  std::int64_t achieved = 0;
  std::int64_t delta_max_singleton = 0;  // Δ = max_v f(v), original f
  std::optional<double> ratio_vs_exact;  // set only when OPT was computed
  std::uint64_t nis_calls = 0;
  std::uint64_t nis_satisfied = 0;
  bool fallback_used = false;
  bool m_prime_capped = false;

  // Solver internals for bound checks and instrumentation-driven tests.
  std::optional<SolverParams> params;
  NisAudit audit;
  std::vector<NisShrinkRecord> shrink;

  // Ledger round bound 2 + T_pre + T·ell·(r + 2); zero params mean the
  // parallel stage never ran (demand met by the preprocessing base).
  std::uint64_t round_bound(std::uint64_t preprocess_rounds = 2) const;
};

}  // namespace minsmc

#endif  // MINSMC_REPORT_HPP_
