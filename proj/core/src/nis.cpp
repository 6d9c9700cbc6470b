#include "minsmc/nis.hpp"

#include <algorithm>
#include <cmath>

namespace minsmc {

namespace {

constexpr std::uint64_t kGuessStream = 1;
constexpr std::uint64_t kSelectStream = 2;

void insert_sorted(IdSet& set, ElementId v) {
  set.insert(std::lower_bound(set.begin(), set.end(), v), v);
}

// Largest guess index: ⌈log_{1+ε̄} m⌉; the ladder then reaches t = |A_p|.
std::int64_t max_guess_index(const SolverParams& p) {
  const double m = static_cast<double>(std::max<std::size_t>(2, p.m));
  return static_cast<std::int64_t>(
      std::ceil(std::log(m) / std::log1p(p.eps_bar)));
}

void complete_shrink(std::vector<NisShrinkRecord>& shrink,
                     std::size_t next_size) {
  if (!shrink.empty() && !shrink.back().has_next) {
    shrink.back().a_next_size = next_size;
    shrink.back().has_next = true;
  }
}

}  // namespace

std::size_t NisAudit::satisfied() const {
  std::size_t n = 0;
  for (const auto& rec : records) n += rec.satisfied ? 1 : 0;
  return n;
}

NisResult nis(const TruncatedOracle& g, const SolverParams& params,
              const BucketSpec& spec, std::span<const ElementId> base,
              std::int64_t base_value, std::span<const ElementId> candidates,
              std::span<const std::int64_t> cand_gains,
              std::span<const double> costs_by_id, StreamRng rng) {
  NisResult result;
  result.final_value = base_value;

  QueryLedger& ledger = g.ledger();
  IdSet cur_base(base.begin(), base.end());

  IdSet pool(candidates.begin(), candidates.end());
  std::vector<std::int64_t> gains(cand_gains.begin(), cand_gains.end());
  bool value_known = true;  // result.final_value == g(cur_base)

  const std::int64_t i_max = max_guess_index(params);
  const double accept = 1.0 - 1.5 * params.eps_bar;

  for (std::int64_t p = 1; p <= params.r; ++p) {
    if (p > 1) {
      if (pool.empty()) {
        // Everything was selected; one query settles feasibility.
        RoundScope round(ledger);
        result.final_value = g.eval(cur_base);
        value_known = true;
        complete_shrink(result.shrink, 0);
        break;
      }
      // Fresh marginals for the survivors; the shared base doubles as the
      // feasibility check of the previous selection.
      const BatchMarginals batch = batch_marginals(g, cur_base, pool);
      result.final_value = batch.base;
      value_known = true;
      if (batch.base >= g.demand()) break;
      gains = batch.gains;
    }

    IdSet filtered;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (refilter_contains(params, spec, gains[i], costs_by_id[pool[i]])) {
        filtered.push_back(pool[i]);
      }
    }
    complete_shrink(result.shrink, filtered.size());
    if (filtered.empty()) break;

    // Size guesses: all estimates belong to one adaptive round, opened only
    // if a guess actually issues queries (t < |A_p|).
    std::int64_t chosen_t = static_cast<std::int64_t>(filtered.size());
    bool threshold_exit = false;
    {
      bool opened = false;
      std::int64_t prev_t = 0;
      StreamRng guess_rng =
          rng.child(static_cast<std::uint64_t>(p)).child(kGuessStream);
      for (std::int64_t i = 0; i <= i_max; ++i) {
        const auto ladder = static_cast<std::int64_t>(std::floor(
            std::pow(1.0 + params.eps_bar, static_cast<double>(i))));
        const std::int64_t t_i = std::min<std::int64_t>(
            ladder, static_cast<std::int64_t>(filtered.size()));
        if (t_i == prev_t) continue;  // identical guess, identical outcome
        prev_t = t_i;
        if (t_i == static_cast<std::int64_t>(filtered.size())) {
          // A∖X is empty for every sample: the estimate is 0.
          chosen_t = t_i;
          break;
        }
        if (!opened && !ledger.round_open()) {
          ledger.begin_round();
          opened = true;
        }
        const double estimate =
            mean_estimate(g, cur_base, filtered, t_i, spec.gain_hi, params,
                          guess_rng.child(static_cast<std::uint64_t>(i)));
        if (estimate <= accept) {
          chosen_t = t_i;
          threshold_exit = true;
          break;
        }
      }
      if (opened) ledger.end_round();
    }

    IdSet picked;
    StreamRng select_rng =
        rng.child(static_cast<std::uint64_t>(p)).child(kSelectStream);
    sample_without_replacement(filtered, static_cast<std::size_t>(chosen_t),
                               select_rng, picked);
    std::sort(picked.begin(), picked.end());
    for (ElementId v : picked) {
      insert_sorted(cur_base, v);
      insert_sorted(result.selected, v);
    }
    value_known = false;

    NisShrinkRecord rec;
    rec.a_size = filtered.size();
    rec.threshold_exit = threshold_exit;
    result.shrink.push_back(rec);

    // Survivors enter the next refilter; selected elements are dropped here
    // (their marginals are zero and would fail the window anyway).
    IdSet next_pool;
    for (ElementId v : filtered) {
      if (!std::binary_search(picked.begin(), picked.end(), v)) {
        next_pool.push_back(v);
      }
    }
    pool = std::move(next_pool);
    gains.clear();  // stale once the base grew
  }

  if (!value_known) {
    // Loop exhausted right after a selection: one dedicated feasibility
    // query.
    RoundScope round(ledger);
    result.final_value = g.eval(cur_base);
  }
  result.reached_demand = result.final_value >= g.demand();
  return result;
}

}  // namespace minsmc
