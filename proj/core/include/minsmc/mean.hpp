#ifndef MINSMC_MEAN_HPP_
#define MINSMC_MEAN_HPP_

#include <cstdint>
#include <span>

#include "minsmc/oracle.hpp"
#include "minsmc/params.hpp"
#include "minsmc/rng.hpp"

namespace minsmc {

// Estimated E[I] where I = I[g_{B∪X}(x) ≥ (1−ε)·tau_threshold], X a uniform
// t-subset of A and x uniform over A∖X, with I = 0 whenever A∖X = ∅. The
// estimate is the mean of m' independent samples; when the pair space
// C(|A|,t)·(|A|−t) is no larger than m', the sample mean is drawn from its
// exact distribution Binomial(m', μ)/m' with μ computed by enumeration,
// which issues far fewer queries without changing the estimator's law.
// Deterministic in the rng stream. All queries land in one adaptive round
// (the caller's open round, or an own round if none is open).
//
// ε (the indicator threshold) comes from params.epsilon; eps_bar only sizes
// the sample count.
double mean_estimate(const TruncatedOracle& g, std::span<const ElementId> b,
                     std::span<const ElementId> a, std::int64_t t,
                     double tau_threshold, const SolverParams& params,
                     StreamRng rng);

// Exact E[I] by full enumeration over all t-subsets X and all x ∈ A∖X.
// Test oracle: uncounted, independent of the estimator path. Refuses when
// C(|A|,t)·(|A|−t) exceeds the budget.
double exact_mean(const SetFunctionOracle& f, std::int64_t k,
                  std::span<const ElementId> b, std::span<const ElementId> a,
                  std::int64_t t, double tau_threshold, double epsilon,
                  std::uint64_t budget = 1'000'000);

// Number of (X, x) pairs, saturating instead of overflowing.
std::uint64_t pair_space_size(std::size_t a_size, std::int64_t t);

}  // namespace minsmc

#endif  // MINSMC_MEAN_HPP_
