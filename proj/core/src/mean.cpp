#include "minsmc/mean.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "minsmc/exec.hpp"

namespace minsmc {

namespace {

constexpr std::uint64_t kPairCap = 1'000'000'000'000ULL;

struct EnumStats {
  std::uint64_t pairs = 0;
  std::uint64_t hits = 0;
  std::uint64_t evals = 0;
};

// Advances idx to the next t-combination of [0, n); false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t t = idx.size();
  std::size_t i = t;
  while (i > 0) {
    --i;
    if (idx[i] != i + n - t) {
      ++idx[i];
      for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Walks every t-subset X of `a` and every x ∈ A∖X, counting indicator hits
// g_{B∪X}(x) ≥ threshold.
EnumStats enumerate_indicator(const SetFunctionOracle& f, std::int64_t k,
                              std::span<const ElementId> b,
                              std::span<const ElementId> a, std::int64_t t,
                              double threshold) {
  EnumStats stats;
  const std::size_t n = a.size();
  auto base = f.make_accumulator();
  for (ElementId v : b) base->add(v);

  std::vector<std::size_t> idx(static_cast<std::size_t>(t));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  auto with_x = f.make_accumulator();
  auto with_xx = f.make_accumulator();
  std::vector<bool> in_x(n, false);

  do {
    with_x->assign(*base);
    std::fill(in_x.begin(), in_x.end(), false);
    for (std::size_t i : idx) {
      with_x->add(a[i]);
      in_x[i] = true;
    }
    const std::int64_t g0 = std::min(with_x->value(), k);
    ++stats.evals;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_x[j]) continue;
      with_xx->assign(*with_x);
      with_xx->add(a[j]);
      const std::int64_t g1 = std::min(with_xx->value(), k);
      ++stats.evals;
      ++stats.pairs;
      if (static_cast<double>(g1 - g0) >= threshold) ++stats.hits;
    }
  } while (next_combination(idx, n));
  return stats;
}

// Opens a round only when the caller has none; queries always land in the
// innermost open round either way.
class MaybeRound {
 public:
  explicit MaybeRound(QueryLedger& ledger)
      : ledger_(ledger), own_(!ledger.round_open()) {
    if (own_) ledger_.begin_round();
  }
  ~MaybeRound() {
    if (own_) ledger_.end_round();
  }

 private:
  QueryLedger& ledger_;
  bool own_;
};

}  // namespace

std::uint64_t pair_space_size(std::size_t a_size, std::int64_t t) {
  if (t < 0 || static_cast<std::size_t>(t) > a_size) return 0;
  const std::uint64_t rest = a_size - static_cast<std::uint64_t>(t);
  if (rest == 0) return 0;
  unsigned __int128 binom = 1;
  for (std::int64_t i = 1; i <= t; ++i) {
    binom = binom * (rest + static_cast<std::uint64_t>(i)) /
            static_cast<std::uint64_t>(i);
    if (binom > kPairCap) return kPairCap;
  }
  const unsigned __int128 total = binom * rest;
  if (total > kPairCap) return kPairCap;
  return static_cast<std::uint64_t>(total);
}

double mean_estimate(const TruncatedOracle& g, std::span<const ElementId> b,
                     std::span<const ElementId> a, std::int64_t t,
                     double tau_threshold, const SolverParams& params,
                     StreamRng rng) {
  const auto n = static_cast<std::int64_t>(a.size());
  if (t < 1 || t > n) {
    throw ContractError("mean_estimate: sample size out of range");
  }
  if (t == n) return 0.0;  // A∖X is always empty; indicator 0 by convention

  const std::int64_t m_prime = std::max<std::int64_t>(1, params.m_prime);
  const double threshold = (1.0 - params.epsilon) * tau_threshold;
  const std::uint64_t pairs = pair_space_size(a.size(), t);

  if (pairs <= static_cast<std::uint64_t>(m_prime)) {
    // The pair space is smaller than the sample budget: compute μ exactly
    // and draw the sample mean from its true law Binomial(m', μ)/m'.
    const EnumStats stats =
        enumerate_indicator(g.inner(), g.demand(), b, a, t, threshold);
    MaybeRound round(g.ledger());
    g.ledger().record_queries(stats.evals);
    const double mu =
        static_cast<double>(stats.hits) / static_cast<double>(stats.pairs);
    if (stats.hits == 0) return 0.0;
    if (stats.hits == stats.pairs) return 1.0;
    std::mt19937_64 engine(rng.child(0).next());
    std::binomial_distribution<std::int64_t> dist(m_prime, mu);
    return static_cast<double>(dist(engine)) /
           static_cast<double>(m_prime);
  }

  // Genuine per-sample evaluation.
  MaybeRound round(g.ledger());
  std::atomic<std::uint64_t> hits{0};
  std::atomic<std::uint64_t> evals{0};
  const auto samples = static_cast<std::size_t>(m_prime);
  parallel_for(samples, [&](std::size_t lo, std::size_t hi) {
    auto base = g.inner().make_accumulator();
    for (ElementId v : b) base->add(v);
    auto with_x = g.inner().make_accumulator();
    auto with_xx = g.inner().make_accumulator();
    IdSet draw;
    std::uint64_t local_hits = 0;
    std::uint64_t local_evals = 0;
    for (std::size_t s = lo; s < hi; ++s) {
      StreamRng sample_rng = rng.child(2 + s);
      draw.clear();
      sample_without_replacement(a, static_cast<std::size_t>(t) + 1,
                                 sample_rng, draw);
      // First t draws form X; the (t+1)-th is a uniform pick from A∖X.
      with_x->assign(*base);
      for (std::size_t i = 0; i + 1 < draw.size(); ++i) with_x->add(draw[i]);
      const std::int64_t g0 = std::min(with_x->value(), g.demand());
      with_xx->assign(*with_x);
      with_xx->add(draw.back());
      const std::int64_t g1 = std::min(with_xx->value(), g.demand());
      local_evals += 2;
      if (static_cast<double>(g1 - g0) >= threshold) ++local_hits;
    }
    hits.fetch_add(local_hits, std::memory_order_relaxed);
    evals.fetch_add(local_evals, std::memory_order_relaxed);
  });
  g.ledger().record_queries(evals.load());
  return static_cast<double>(hits.load()) / static_cast<double>(m_prime);
}

double exact_mean(const SetFunctionOracle& f, std::int64_t k,
                  std::span<const ElementId> b, std::span<const ElementId> a,
                  std::int64_t t, double tau_threshold, double epsilon,
                  std::uint64_t budget) {
  const auto n = static_cast<std::int64_t>(a.size());
  if (t < 1 || t > n) {
    throw ContractError("exact_mean: sample size out of range");
  }
  if (t == n) return 0.0;
  const std::uint64_t pairs = pair_space_size(a.size(), t);
  if (pairs > budget) {
    throw BudgetError("exact_mean: enumeration budget exceeded");
  }
  const double threshold = (1.0 - epsilon) * tau_threshold;
  const EnumStats stats = enumerate_indicator(f, k, b, a, t, threshold);
  return static_cast<double>(stats.hits) / static_cast<double>(stats.pairs);
}

}  // namespace minsmc
