#ifndef MINSMC_PARAMS_HPP_
#define MINSMC_PARAMS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "minsmc/coverage.hpp"
#include "minsmc/ledger.hpp"
#include "minsmc/oracle.hpp"

namespace minsmc {

// All derived constants of the parallel solver. Bases follow the source
// formulas: T, ell, r use log base 1/(1−·) and are ceiled, all floored at 1;
// m_prime uses the natural log.
struct SolverParams {
  double epsilon = 0.0;      // validated in (0, 0.2)
  double beta = 0.0;         // max_v g(v)/c(v)
  std::int64_t tau = 0;      // max_v g(v)
  std::int64_t T = 1;        // ⌈log_{1/(1−ε)}(k·c_max/c_min)⌉, ≥ 1
  std::int64_t ell = 1;      // ⌈log_{1/(1−ε)} k⌉, ≥ 1
  double eps_bar = 0.0;      // (1/3)(1 − 1/(2·T·ell))·ε
  std::int64_t r = 1;        // ⌈log_{1/(1−eps_bar)}(2·m·T·ell)/ε⌉, ≥ 1
  double delta = 0.0;        // ε/(2·r·k·T²·ell)
  std::int64_t m_prime = 0;  // 8·⌈ln(2/δ)/eps_bar²⌉, capped
  bool m_prime_capped = false;

  std::size_t m = 0;
  std::int64_t k = 0;
  double c_max = 0.0;
  double c_min = 0.0;

  // Element attaining beta; bucket membership tests cross-multiply against
  // this pair so the argmax never falls out of its own bucket.
  std::int64_t beta_gain = 0;
  double beta_cost = 1.0;
};

inline constexpr std::int64_t kMaxSamples = 1'000'000;  // m_prime cap

// Formula helpers, exposed for direct verification in tests.
std::int64_t ceil_log_ratio(double value, double one_minus_eps);  // ≥ 1
SolverParams derive_param_formulas(double epsilon, std::size_t m,
                                   std::int64_t k, double c_max, double c_min,
                                   std::int64_t tau, double beta,
                                   std::int64_t beta_gain, double beta_cost);

struct DeriveResult {
  SolverParams params;
  std::vector<std::int64_t> singleton_gains;  // g_∅(v), aligned with ground
  std::int64_t base_value = 0;                // g(∅)
};

// One adaptive round evaluating every g({v}); β and τ from those values,
// c_max/c_min from the costs. Throws ConfigError for ε ∉ (0, 0.2).
DeriveResult derive_params_view(const TruncatedOracle& g,
                                std::span<const ElementId> ground,
                                std::span<const double> costs_by_id,
                                double epsilon);

SolverParams derive_params(const CoverageInstance& inst, double epsilon,
                           QueryLedger& ledger);

// Geometric (ratio, gain) window for bucket (t, t'). Membership is half-open
// [lo, hi) except at t = 1 / t' = 1 where the top closes, so every element
// belongs to exactly one bucket per state.
struct BucketSpec {
  std::int64_t t = 1;
  std::int64_t t_prime = 1;
  double ratio_hi = 0.0;
  double ratio_lo = 0.0;
  double gain_hi = 0.0;
  double gain_lo = 0.0;
};

BucketSpec make_bucket_spec(const SolverParams& p, std::int64_t t,
                            std::int64_t t_prime);

// Membership of an element with marginal `gain` and cost `cost` in the
// bucket. Ratio comparisons are cross-multiplied against the β-defining
// pair, so they are exact under power-of-two cost scaling.
bool bucket_contains(const SolverParams& p, const BucketSpec& spec,
                     std::int64_t gain, double cost);

// The inner-iteration refilter window [(1−ε)·hi, hi] on both axes; same
// bounds as the bucket but closed at the top.
bool refilter_contains(const SolverParams& p, const BucketSpec& spec,
                       std::int64_t gain, double cost);

}  // namespace minsmc

#endif  // MINSMC_PARAMS_HPP_
