#include "minsmc/exact.hpp"

#include <bit>
#include <limits>

namespace minsmc {

namespace {

struct Search {
  const CoverageInstance& inst;
  std::size_t words;
  std::int64_t k;
  // suffix_mask[i] = union of covers of elements i..m-1
  std::vector<std::uint64_t> suffix_mask;
  // covered-bit scratch, one row per depth
  std::vector<std::uint64_t> scratch;

  IdSet best;
  double best_cost = std::numeric_limits<double>::infinity();
  bool found = false;

  explicit Search(const CoverageInstance& i)
      : inst(i), words(i.mask_words()), k(i.k()) {
    const std::size_t m = inst.m();
    suffix_mask.assign((m + 1) * words, 0);
    for (std::size_t v = m; v-- > 0;) {
      const auto mask = inst.mask(static_cast<ElementId>(v));
      for (std::size_t w = 0; w < words; ++w) {
        suffix_mask[v * words + w] = suffix_mask[(v + 1) * words + w] | mask[w];
      }
    }
    scratch.assign((m + 1) * words, 0);
  }

  std::int64_t weight_of_new(const std::uint64_t* covered,
                             const std::uint64_t* mask) const {
    std::int64_t w = 0;
    if (inst.weighted()) {
      for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t fresh = mask[i] & ~covered[i];
        while (fresh != 0) {
          const int bit = std::countr_zero(fresh);
          w += inst.item_weight(i * 64 + static_cast<std::size_t>(bit));
          fresh &= fresh - 1;
        }
      }
    } else {
      for (std::size_t i = 0; i < words; ++i) {
        w += std::popcount(mask[i] & ~covered[i]);
      }
    }
    return w;
  }

  // Include-before-exclude in id order visits candidate sets in
  // lexicographic order, so keeping the first strictly cheaper solution
  // realizes the (cost, lexicographically smallest ids) tie rule.
  void dfs(std::size_t depth, std::int64_t value, double cost, IdSet& chosen) {
    if (value >= k) {
      if (cost < best_cost) {
        best_cost = cost;
        best = chosen;
        found = true;
      }
      return;
    }
    if (depth == inst.m()) return;
    if (cost >= best_cost) return;
    const std::uint64_t* covered = &scratch[depth * words];
    if (value + weight_of_new(covered, &suffix_mask[depth * words]) < k) {
      return;
    }

    // include element `depth`
    std::uint64_t* next = &scratch[(depth + 1) * words];
    const auto mask = inst.mask(static_cast<ElementId>(depth));
    const std::int64_t gained = weight_of_new(covered, mask.data());
    for (std::size_t w = 0; w < words; ++w) next[w] = covered[w] | mask[w];
    chosen.push_back(static_cast<ElementId>(depth));
    dfs(depth + 1, value + gained,
        cost + inst.cost(static_cast<ElementId>(depth)), chosen);
    chosen.pop_back();

    // exclude
    for (std::size_t w = 0; w < words; ++w) next[w] = covered[w];
    dfs(depth + 1, value, cost, chosen);
  }
};

}  // namespace

Solution exact_solve(const CoverageInstance& inst, int subset_limit) {
  if (static_cast<int>(inst.m()) > subset_limit) {
    throw BudgetError("exact_solve: m exceeds subset limit");
  }
  if (inst.k() > inst.total_value()) {
    throw InfeasibleDemandError("infeasible demand: k exceeds f(V)");
  }

  Search search(inst);
  IdSet chosen;
  search.dfs(0, 0, 0.0, chosen);
  if (!search.found) {
    throw InfeasibleDemandError("no feasible subset");  // unreachable
  }

  Solution sol;
  sol.algorithm = Algo::kExact;
  sol.chosen = std::move(search.best);
  sol.total_cost = inst.cost_of(sol.chosen);
  sol.achieved = std::min(inst.f_value(sol.chosen), inst.k());
  return sol;
}

}  // namespace minsmc
