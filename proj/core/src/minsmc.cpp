#include "minsmc/minsmc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "minsmc/greedy.hpp"
#include "minsmc/nis.hpp"
#include "minsmc/params.hpp"
#include "minsmc/rng.hpp"

namespace minsmc {

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 0.2)) {
    throw ConfigError("epsilon must lie in (0, 0.2)");
  }
}

namespace {

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::int64_t max_singleton_value(const SetFunctionOracle& f) {
  std::int64_t best = 0;
  auto acc = f.make_accumulator();
  for (std::size_t v = 0; v < f.ground_size(); ++v) {
    acc->clear();
    acc->add(static_cast<ElementId>(v));
    best = std::max(best, acc->value());
  }
  return best;
}

}  // namespace

IdSet minsmc_par_view(const SetFunctionOracle& f,
                      std::span<const ElementId> ground,
                      std::span<const double> costs_by_id, std::int64_t demand,
                      double epsilon, std::uint64_t seed, QueryLedger& ledger,
                      RunReport& report) {
  validate_epsilon(epsilon);
  if (demand < 1) throw ContractError("demand must be >= 1");
  {
    IdSet all(ground.begin(), ground.end());
    if (truncated_value(f, demand, all) < demand) {
      throw InfeasibleDemandError("infeasible demand: k exceeds g(ground)");
    }
  }

  TruncatedOracle g(f, demand, ledger);
  const DeriveResult derive =
      derive_params_view(g, ground, costs_by_id, epsilon);
  const SolverParams& params = derive.params;
  report.params = params;
  report.m_prime_capped = params.m_prime_capped;

  IdSet chosen;
  std::vector<std::int64_t> cache = derive.singleton_gains;  // g_B(v) cache
  std::int64_t cur_value = derive.base_value;                // g(B)
  bool cache_valid = true;
  StreamRng root(seed);

  bool done = cur_value >= demand;
  for (std::int64_t t = 1; t <= params.T && !done; ++t) {
    for (std::int64_t tp = 1; tp <= params.ell && !done; ++tp) {
      if (!cache_valid) {
        IdSet remaining;
        remaining.reserve(ground.size() - chosen.size());
        for (ElementId v : ground) {
          if (!std::binary_search(chosen.begin(), chosen.end(), v)) {
            remaining.push_back(v);
          }
        }
        if (remaining.empty()) break;  // B = ground; cur_value is final
        const BatchMarginals batch = batch_marginals(g, chosen, remaining);
        cur_value = batch.base;
        std::fill(cache.begin(), cache.end(), 0);
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          const auto pos = static_cast<std::size_t>(
              std::lower_bound(ground.begin(), ground.end(), remaining[i]) -
              ground.begin());
          cache[pos] = batch.gains[i];
        }
        cache_valid = true;
        if (cur_value >= demand) {
          done = true;
          break;
        }
      }

      const BucketSpec spec = make_bucket_spec(params, t, tp);
      IdSet bucket_ids;
      std::vector<std::int64_t> bucket_gains;
      for (std::size_t i = 0; i < ground.size(); ++i) {
        const ElementId v = ground[i];
        if (std::binary_search(chosen.begin(), chosen.end(), v)) continue;
        if (bucket_contains(params, spec, cache[i], costs_by_id[v])) {
          bucket_ids.push_back(v);
          bucket_gains.push_back(cache[i]);
        }
      }
      if (bucket_ids.empty()) continue;  // empty bucket advances t'

      StreamRng nis_rng = root.child(static_cast<std::uint64_t>(t))
                              .child(static_cast<std::uint64_t>(tp));
      const NisResult nr =
          nis(g, params, spec, chosen, cur_value, bucket_ids, bucket_gains,
              costs_by_id, nis_rng);

      NisAuditRecord audit;
      audit.t = t;
      audit.t_prime = tp;
      audit.j_size = nr.selected.size();
      audit.joint_gain = nr.final_value - cur_value;
      audit.sum_gain = 0;
      for (std::size_t i = 0; i < bucket_ids.size(); ++i) {
        if (std::binary_search(nr.selected.begin(), nr.selected.end(),
                               bucket_ids[i])) {
          audit.sum_gain += bucket_gains[i];
        }
      }
      const double slack = (1.0 - epsilon) * (1.0 - epsilon);
      audit.satisfied = static_cast<double>(audit.joint_gain) >=
                        slack * static_cast<double>(audit.sum_gain);
      audit.selected = nr.selected;
      report.audit.records.push_back(std::move(audit));
      report.shrink.insert(report.shrink.end(), nr.shrink.begin(),
                           nr.shrink.end());

      IdSet merged = set_union(chosen, nr.selected);
      chosen = std::move(merged);
      cur_value = nr.final_value;
      cache_valid = false;
      if (nr.reached_demand) done = true;
    }
  }

  if (cur_value < demand) {
    // Loop exhaustion: finish with greedy on the residual and flag the run.
    report.fallback_used = true;
    chosen = greedy_extend(g, ground, costs_by_id, chosen);
  }

  report.nis_calls = report.audit.calls();
  report.nis_satisfied = report.audit.satisfied();
  return chosen;
}

SolveOutcome minsmc_par(const CoverageInstance& inst, double epsilon,
                        std::uint64_t seed) {
  WallTimer timer;
  QueryLedger ledger;
  SolveOutcome out;
  out.report.algorithm = Algo::kMinsmcPar;
  out.report.seed = seed;

  const IdSet ground = inst.all_ids();
  out.solution.chosen =
      minsmc_par_view(inst.oracle(), ground, inst.costs(), inst.k(), epsilon,
                      seed, ledger, out.report);
  out.solution.algorithm = Algo::kMinsmcPar;
  out.solution.seed = seed;
  out.solution.total_cost = inst.cost_of(out.solution.chosen);
  out.solution.achieved =
      std::min(inst.f_value(out.solution.chosen), inst.k());

  out.report.rounds = ledger.rounds();
  out.report.queries = ledger.queries();
  out.report.cost = out.solution.total_cost;
  out.report.achieved = out.solution.achieved;
  out.report.delta_max_singleton = inst.delta_max_singleton();
  out.report.wall_ms = timer.elapsed_ms();
  return out;
}

namespace {

PreprocessResult preprocess_view(const SetFunctionOracle& f,
                                 std::span<const double> costs_by_id,
                                 std::int64_t demand, double epsilon,
                                 QueryLedger& ledger) {
  validate_epsilon(epsilon);
  const std::size_t m = f.ground_size();
  if (m == 0) throw ContractError("preprocess: empty ground set");

  // Index elements by increasing cost (ties by id for determinism).
  IdSet order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) {
                     if (costs_by_id[a] != costs_by_id[b]) {
                       return costs_by_id[a] < costs_by_id[b];
                     }
                     return a < b;
                   });

  // Round 1: all m prefix values g({v_1..v_i}). The full prefix ladder is
  // issued — the round's query set may not depend on answers inside the
  // round — and j is read off afterwards.
  PreprocessResult pre;
  {
    RoundScope round(ledger);
    auto acc = f.make_accumulator();
    std::size_t j = 0;
    for (std::size_t i = 0; i < m; ++i) {
      acc->add(order[i]);
      round.record(1);
      if (j == 0 && std::min(acc->value(), demand) >= demand) {
        j = i + 1;  // 1-based pivot
      }
    }
    if (j == 0) {
      throw InfeasibleDemandError("infeasible demand: k exceeds g(V)");
    }
    pre.j = j;
  }
  pre.pivot_cost = costs_by_id[order[pre.j - 1]];

  const double lo = epsilon /
                    (static_cast<double>(m) * static_cast<double>(demand)) *
                    pre.pivot_cost;
  const double hi = static_cast<double>(pre.j) * pre.pivot_cost;
  for (std::size_t v = 0; v < m; ++v) {
    const double c = costs_by_id[v];
    if (c < lo) {
      pre.v0.push_back(static_cast<ElementId>(v));
    } else if (c > hi) {
      pre.v1.push_back(static_cast<ElementId>(v));
    } else {
      pre.vmod.push_back(static_cast<ElementId>(v));
    }
  }

  // Round 2: g(V0) for the reduced demand.
  {
    RoundScope round(ledger);
    round.record(1);
    pre.g_v0 = truncated_value(f, demand, pre.v0);
  }
  pre.k_mod = std::max<std::int64_t>(0, demand - pre.g_v0);
  return pre;
}

}  // namespace

PreprocessResult preprocess(const CoverageInstance& inst, double epsilon,
                            QueryLedger& ledger) {
  if (inst.k() > inst.total_value()) {
    throw InfeasibleDemandError("infeasible demand: k exceeds f(V)");
  }
  return preprocess_view(inst.oracle(), inst.costs(), inst.k(), epsilon,
                         ledger);
}

SolveOutcome minsmc_main_view(const SetFunctionOracle& f,
                              std::span<const double> costs_by_id,
                              std::int64_t demand, double epsilon,
                              std::uint64_t seed) {
  WallTimer timer;
  QueryLedger ledger;
  SolveOutcome out;
  out.report.algorithm = Algo::kMinsmcMain;
  out.report.seed = seed;

  const PreprocessResult pre =
      preprocess_view(f, costs_by_id, demand, epsilon, ledger);

  IdSet chosen;
  if (pre.k_mod == 0) {
    // The cheap slice alone meets the demand; no parallel stage.
    chosen = pre.v0;
  } else if (pre.v0.empty()) {
    chosen = minsmc_par_view(f, pre.vmod, costs_by_id, pre.k_mod, epsilon,
                             seed, ledger, out.report);
  } else {
    MarginalShiftOracle shifted(f, pre.v0);
    const IdSet b_mod = minsmc_par_view(shifted, pre.vmod, costs_by_id,
                                        pre.k_mod, epsilon, seed, ledger,
                                        out.report);
    chosen = set_union(b_mod, pre.v0);
  }

  out.solution.chosen = std::move(chosen);
  out.solution.algorithm = Algo::kMinsmcMain;
  out.solution.seed = seed;
  double cost = 0.0;
  for (ElementId v : out.solution.chosen) cost += costs_by_id[v];
  out.solution.total_cost = cost;
  out.solution.achieved =
      truncated_value(f, demand, out.solution.chosen);

  out.report.rounds = ledger.rounds();
  out.report.queries = ledger.queries();
  out.report.cost = cost;
  out.report.achieved = out.solution.achieved;
  out.report.delta_max_singleton = max_singleton_value(f);
  out.report.wall_ms = timer.elapsed_ms();
  return out;
}

SolveOutcome minsmc_main(const CoverageInstance& inst, double epsilon,
                         std::uint64_t seed) {
  if (inst.k() > inst.total_value()) {
    throw InfeasibleDemandError("infeasible demand: k exceeds f(V)");
  }
  if (inst.k() < 1) throw ContractError("demand must be >= 1");
  SolveOutcome out =
      minsmc_main_view(inst.oracle(), inst.costs(), inst.k(), epsilon, seed);
  out.report.delta_max_singleton = inst.delta_max_singleton();
  return out;
}

}  // namespace minsmc
