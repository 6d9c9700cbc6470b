#ifndef MINSMC_COVERAGE_HPP_
#define MINSMC_COVERAGE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minsmc/oracle.hpp"
#include "minsmc/types.hpp"

namespace minsmc {

// Weighted coverage instance: element v covers a fixed set of universe
// items; f(S) is the total weight of items covered by S. Integer, monotone,
// submodular, and cheap to brute-force, which keeps Δ and OPT computable.
// Immutable after construction; safe for concurrent reads.
class CoverageInstance {
 public:
  // covers[v] lists item indices in [0, universe_size); weights empty means
  // all-ones. Validates invariants (costs > 0, k ≤ f(V), indices in range).
  CoverageInstance(std::size_t universe_size, std::vector<IdSet> covers,
                   std::vector<double> costs, std::int64_t k,
                   std::vector<std::int64_t> item_weights = {});

  std::size_t m() const { return covers_.size(); }
  std::size_t universe_size() const { return universe_size_; }
  std::int64_t k() const { return k_; }
  const std::vector<double>& costs() const { return costs_; }
  double cost(ElementId v) const { return costs_[v]; }
  double cost_of(std::span<const ElementId> s) const;
  const std::vector<IdSet>& covers() const { return covers_; }
  bool weighted() const { return !item_weights_.empty(); }
  const std::vector<std::int64_t>& item_weights() const {
    return item_weights_;
  }

  // f(V): total weight of items covered by at least one element.
  std::int64_t total_value() const { return total_value_; }

  // Δ = max_v f({v}).
  std::int64_t delta_max_singleton() const { return delta_; }

  // f(S); throws InputError on an out-of-range id.
  std::int64_t f_value(std::span<const ElementId> s) const;

  const SetFunctionOracle& oracle() const { return *oracle_; }

  // All element ids, ascending.
  IdSet all_ids() const;

  // Internal: bitmask of covered items per element, for accumulators.
  std::span<const std::uint64_t> mask(ElementId v) const;
  std::size_t mask_words() const { return mask_words_; }
  std::int64_t item_weight(std::size_t item) const {
    return item_weights_.empty() ? 1 : item_weights_[item];
  }

 private:
  std::size_t universe_size_;
  std::vector<IdSet> covers_;
  std::vector<double> costs_;
  std::int64_t k_;
  std::vector<std::int64_t> item_weights_;

  std::size_t mask_words_;
  std::vector<std::uint64_t> masks_;  // m × mask_words_
  std::int64_t total_value_ = 0;
  std::int64_t delta_ = 0;
  std::unique_ptr<SetFunctionOracle> oracle_;
};

// Free-function form of the coverage oracle.
std::int64_t coverage_eval(const CoverageInstance& inst,
                           std::span<const ElementId> s);

struct GeneratorConfig {
  std::size_t m = 0;
  std::size_t universe_size = 0;
  double density = 0.0;  // probability each (element, item) pair is covered
  double cost_low = 1.0;
  double cost_high = 1.0;
  double k_fraction = 1.0;  // k = max(1, floor(k_fraction · f(V)))
  std::uint64_t seed = 0;
};

// Random coverage instance, bit-identical for identical configs. Every
// universe item ends up covered by at least one element, so f(V) equals the
// total item weight. Costs are log-uniform in [cost_low, cost_high].
CoverageInstance gen_random_coverage(const GeneratorConfig& cfg);

}  // namespace minsmc

#endif  // MINSMC_COVERAGE_HPP_
