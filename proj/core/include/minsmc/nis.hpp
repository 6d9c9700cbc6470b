#ifndef MINSMC_NIS_HPP_
#define MINSMC_NIS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "minsmc/mean.hpp"
#include "minsmc/oracle.hpp"
#include "minsmc/params.hpp"
#include "minsmc/rng.hpp"

namespace minsmc {

// Per-call audit record for the nearly-independent property
// g_B(J) ≥ (1−ε)²·Σ_{v∈J} g_B(v).
struct NisAuditRecord {
  std::int64_t t = 0;
  std::int64_t t_prime = 0;
  std::size_t j_size = 0;
  std::int64_t joint_gain = 0;  // g_B(J)
  std::int64_t sum_gain = 0;    // Σ_{v∈J} g_B(v)
  bool satisfied = false;
  IdSet selected;  // J, sorted
};

struct NisAudit {
  std::vector<NisAuditRecord> records;

  std::size_t calls() const { return records.size(); }
  std::size_t satisfied() const;
};

// Shrink trace of one inner iteration: |A_{p+1}| / |A_p| where defined.
struct NisShrinkRecord {
  std::size_t a_size = 0;        // |A_p|
  std::size_t a_next_size = 0;   // |A_{p+1}|, valid when has_next
  bool has_next = false;
  bool threshold_exit = false;   // chosen t_p < |A_p| (genuine estimate pass)
};

struct NisResult {
  IdSet selected;                // J = union of all sampled T_p, sorted
  std::int64_t final_value = 0;  // g(B ∪ J)
  bool reached_demand = false;   // g(B ∪ J) ≥ k
  std::vector<NisShrinkRecord> shrink;
};

// One bucket's ε-NIS selection. `candidates` are the bucket members and
// `cand_gains` their current marginals w.r.t. `base` (already evaluated by
// the caller's bucket-construction round, so iteration p = 1 refilters on
// cached values without a new round). Refilter windows are the bucket's
// bounds closed at the top; the gain threshold fed to the estimator is the
// bucket's upper gain bound.
//
// Per iteration: one round of fresh marginals over the surviving candidates
// (doubling as the feasibility check of the previous selection), then one
// round evaluating the size guesses t_p = min(⌊(1+ε̄)^i⌋, |A_p|) — each
// distinct size once, in ascending order, stopping at the first estimate
// ≤ 1 − 1.5·ε̄ (guaranteed at t_p = |A_p|, which yields 0). A uniform
// t_p-subset is then merged into the selection.
NisResult nis(const TruncatedOracle& g, const SolverParams& params,
              const BucketSpec& spec, std::span<const ElementId> base,
              std::int64_t base_value, std::span<const ElementId> candidates,
              std::span<const std::int64_t> cand_gains,
              std::span<const double> costs_by_id, StreamRng rng);

}  // namespace minsmc

#endif  // MINSMC_NIS_HPP_
