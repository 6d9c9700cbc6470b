#include "minsmc/params.hpp"

#include <algorithm>
#include <cmath>

#include "minsmc/minsmc.hpp"

namespace minsmc {

std::int64_t ceil_log_ratio(double value, double one_minus_eps) {
  // ⌈log_{1/(1-ε)}(value)⌉ computed in long double, floored at 1.
  if (!(value > 1.0L)) return 1;
  const long double num = std::log(static_cast<long double>(value));
  const long double den = -std::log(static_cast<long double>(one_minus_eps));
  const auto ceiled = static_cast<std::int64_t>(std::ceil(num / den));
  return std::max<std::int64_t>(1, ceiled);
}

SolverParams derive_param_formulas(double epsilon, std::size_t m,
                                   std::int64_t k, double c_max, double c_min,
                                   std::int64_t tau, double beta,
                                   std::int64_t beta_gain, double beta_cost) {
  SolverParams p;
  p.epsilon = epsilon;
  p.m = m;
  p.k = k;
  p.c_max = c_max;
  p.c_min = c_min;
  p.tau = tau;
  p.beta = beta;
  p.beta_gain = beta_gain;
  p.beta_cost = beta_cost;

  const double one_minus = 1.0 - epsilon;
  p.T = ceil_log_ratio(static_cast<double>(k) * (c_max / c_min), one_minus);
  p.ell = ceil_log_ratio(static_cast<double>(k), one_minus);

  const double t_ell = static_cast<double>(p.T) * static_cast<double>(p.ell);
  p.eps_bar = (1.0 / 3.0) * (1.0 - 1.0 / (2.0 * t_ell)) * epsilon;

  {
    // r = ⌈log_{1/(1-ε̄)}(2mTℓ)/ε⌉ — the division by ε sits outside the log
    // and inside the ceiling.
    const long double num =
        std::log(2.0L * static_cast<long double>(m) * t_ell);
    const long double den =
        -std::log(1.0L - static_cast<long double>(p.eps_bar));
    const long double raw = (num / den) / static_cast<long double>(epsilon);
    p.r = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(raw)));
  }

  p.delta = epsilon / (2.0 * static_cast<double>(p.r) *
                       static_cast<double>(k) * static_cast<double>(p.T) *
                       static_cast<double>(p.T) * static_cast<double>(p.ell));

  // Natural log inside the sample count.
  const double ln_term = std::log(2.0 / p.delta);
  const double raw_samples =
      8.0 * std::ceil(ln_term / (p.eps_bar * p.eps_bar));
  if (!(raw_samples < static_cast<double>(kMaxSamples))) {
    p.m_prime = kMaxSamples;
    p.m_prime_capped = true;
  } else {
    p.m_prime = static_cast<std::int64_t>(raw_samples);
  }
  return p;
}

DeriveResult derive_params_view(const TruncatedOracle& g,
                                std::span<const ElementId> ground,
                                std::span<const double> costs_by_id,
                                double epsilon) {
  validate_epsilon(epsilon);
  if (ground.empty()) throw ContractError("derive_params: empty ground set");
  if (g.demand() < 1) throw ContractError("derive_params: demand must be >= 1");

  DeriveResult out;
  const BatchMarginals batch = batch_marginals(g, {}, ground);
  out.base_value = batch.base;
  out.singleton_gains = batch.gains;

  std::int64_t tau = 0;
  std::size_t beta_at = 0;
  double c_max = costs_by_id[ground[0]];
  double c_min = c_max;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    const std::int64_t value = batch.base + batch.gains[i];  // g({v})
    const double cost = costs_by_id[ground[i]];
    tau = std::max(tau, value);
    c_max = std::max(c_max, cost);
    c_min = std::min(c_min, cost);
    const std::int64_t best_val = batch.base + batch.gains[beta_at];
    if (static_cast<double>(value) * costs_by_id[ground[beta_at]] >
        static_cast<double>(best_val) * cost) {
      beta_at = i;
    }
  }
  const std::int64_t beta_gain = batch.base + batch.gains[beta_at];
  const double beta_cost = costs_by_id[ground[beta_at]];
  const double beta = static_cast<double>(beta_gain) / beta_cost;

  out.params = derive_param_formulas(epsilon, ground.size(), g.demand(),
                                     c_max, c_min, tau, beta, beta_gain,
                                     beta_cost);
  return out;
}

SolverParams derive_params(const CoverageInstance& inst, double epsilon,
                           QueryLedger& ledger) {
  TruncatedOracle g(inst.oracle(), inst.k(), ledger);
  const IdSet ids = inst.all_ids();
  return derive_params_view(g, ids, inst.costs(), epsilon).params;
}

namespace {

double geom_pow(double one_minus_eps, std::int64_t exponent) {
  return std::pow(one_minus_eps, static_cast<double>(exponent));
}

}  // namespace

BucketSpec make_bucket_spec(const SolverParams& p, std::int64_t t,
                            std::int64_t t_prime) {
  BucketSpec spec;
  spec.t = t;
  spec.t_prime = t_prime;
  const double one_minus = 1.0 - p.epsilon;
  spec.ratio_hi = geom_pow(one_minus, t - 1) * p.beta;
  spec.ratio_lo = geom_pow(one_minus, t) * p.beta;
  spec.gain_hi = geom_pow(one_minus, t_prime - 1) * static_cast<double>(p.tau);
  spec.gain_lo = geom_pow(one_minus, t_prime) * static_cast<double>(p.tau);
  return spec;
}

namespace {

bool window_contains(const SolverParams& p, const BucketSpec& spec,
                     std::int64_t gain, double cost, bool ratio_top_closed,
                     bool gain_top_closed) {
  if (gain <= 0) return false;
  const double one_minus = 1.0 - p.epsilon;

  // Ratio window: gain/cost vs (1-ε)^x · β with β = beta_gain/beta_cost.
  // Cross-multiplied: gain·beta_cost vs (1-ε)^x · beta_gain·cost, exact for
  // the β-attaining element at x = 0 (factor is exactly 1).
  const double lhs = static_cast<double>(gain) * p.beta_cost;
  const double ratio_hi_rhs =
      geom_pow(one_minus, spec.t - 1) * static_cast<double>(p.beta_gain) * cost;
  const double ratio_lo_rhs =
      geom_pow(one_minus, spec.t) * static_cast<double>(p.beta_gain) * cost;
  const bool ratio_ok =
      lhs >= ratio_lo_rhs &&
      (ratio_top_closed ? lhs <= ratio_hi_rhs : lhs < ratio_hi_rhs);
  if (!ratio_ok) return false;

  const auto gain_d = static_cast<double>(gain);
  return gain_d >= spec.gain_lo &&
         (gain_top_closed ? gain_d <= spec.gain_hi : gain_d < spec.gain_hi);
}

}  // namespace

bool bucket_contains(const SolverParams& p, const BucketSpec& spec,
                     std::int64_t gain, double cost) {
  // Half-open [lo, hi), top-closed only for the first window on each axis,
  // so each element sits in exactly one bucket per state.
  return window_contains(p, spec, gain, cost, spec.t == 1, spec.t_prime == 1);
}

bool refilter_contains(const SolverParams& p, const BucketSpec& spec,
                       std::int64_t gain, double cost) {
  return window_contains(p, spec, gain, cost, true, true);
}

}  // namespace minsmc
