#include "minsmc/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "minsmc/rng.hpp"

namespace minsmc {

namespace {

class CoverageAccumulator : public OracleAccumulator {
 public:
  explicit CoverageAccumulator(const CoverageInstance& inst)
      : inst_(&inst), covered_(inst.mask_words(), 0) {}

  void clear() override {
    std::fill(covered_.begin(), covered_.end(), 0);
    value_ = 0;
  }

  void add(ElementId v) override {
    const auto mask = inst_->mask(v);
    if (inst_->weighted()) {
      for (std::size_t w = 0; w < mask.size(); ++w) {
        std::uint64_t fresh = mask[w] & ~covered_[w];
        while (fresh != 0) {
          const int bit = std::countr_zero(fresh);
          value_ += inst_->item_weight(w * 64 + static_cast<std::size_t>(bit));
          fresh &= fresh - 1;
        }
        covered_[w] |= mask[w];
      }
    } else {
      for (std::size_t w = 0; w < mask.size(); ++w) {
        value_ += std::popcount(mask[w] & ~covered_[w]);
        covered_[w] |= mask[w];
      }
    }
  }

  std::int64_t value() const override { return value_; }

  void assign(const OracleAccumulator& other) override {
    const auto& o = static_cast<const CoverageAccumulator&>(other);
    inst_ = o.inst_;
    covered_ = o.covered_;
    value_ = o.value_;
  }

  std::unique_ptr<OracleAccumulator> clone() const override {
    return std::make_unique<CoverageAccumulator>(*this);
  }

 private:
  const CoverageInstance* inst_;
  std::vector<std::uint64_t> covered_;
  std::int64_t value_ = 0;
};

class CoverageOracle : public SetFunctionOracle {
 public:
  explicit CoverageOracle(const CoverageInstance& inst) : inst_(inst) {}

  std::size_t ground_size() const override { return inst_.m(); }

  std::int64_t eval(std::span<const ElementId> s) const override {
    return inst_.f_value(s);
  }

  std::unique_ptr<OracleAccumulator> make_accumulator() const override {
    return std::make_unique<CoverageAccumulator>(inst_);
  }

 private:
  const CoverageInstance& inst_;
};

}  // namespace

CoverageInstance::CoverageInstance(std::size_t universe_size,
                                   std::vector<IdSet> covers,
                                   std::vector<double> costs, std::int64_t k,
                                   std::vector<std::int64_t> item_weights)
    : universe_size_(universe_size),
      covers_(std::move(covers)),
      costs_(std::move(costs)),
      k_(k),
      item_weights_(std::move(item_weights)) {
  if (costs_.size() != covers_.size()) {
    throw InputError("costs and covers must have equal length");
  }
  for (double c : costs_) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw InputError("nonpositive cost");
    }
  }
  if (!item_weights_.empty()) {
    if (item_weights_.size() != universe_size_) {
      throw InputError("item_weights length must equal universe_size");
    }
    for (std::int64_t w : item_weights_) {
      if (w < 1) throw InputError("item weights must be positive integers");
    }
    // All-ones weights collapse to the unweighted representation.
    if (std::all_of(item_weights_.begin(), item_weights_.end(),
                    [](std::int64_t w) { return w == 1; })) {
      item_weights_.clear();
    }
  }
  if (k_ < 0) throw InputError("demand k must be nonnegative");

  mask_words_ = (universe_size_ + 63) / 64;
  masks_.assign(covers_.size() * mask_words_, 0);
  for (std::size_t v = 0; v < covers_.size(); ++v) {
    auto& cov = covers_[v];
    canonicalize(cov);
    for (ElementId item : cov) {
      if (item >= universe_size_) {
        throw InputError("covers index out of range");
      }
      masks_[v * mask_words_ + item / 64] |= std::uint64_t{1} << (item % 64);
    }
  }

  oracle_ = std::make_unique<CoverageOracle>(*this);

  auto acc = oracle_->make_accumulator();
  for (std::size_t v = 0; v < covers_.size(); ++v) {
    auto single = oracle_->make_accumulator();
    single->add(static_cast<ElementId>(v));
    delta_ = std::max(delta_, single->value());
    acc->add(static_cast<ElementId>(v));
  }
  total_value_ = acc->value();

  if (k_ > total_value_) {
    throw InfeasibleDemandError("infeasible demand: k exceeds f(V)");
  }
}

double CoverageInstance::cost_of(std::span<const ElementId> s) const {
  double c = 0.0;
  for (ElementId v : s) c += costs_[v];
  return c;
}

std::int64_t CoverageInstance::f_value(std::span<const ElementId> s) const {
  auto acc = oracle_->make_accumulator();
  for (ElementId v : s) {
    if (v >= covers_.size()) throw InputError("element id out of range");
    acc->add(v);
  }
  return acc->value();
}

std::span<const std::uint64_t> CoverageInstance::mask(ElementId v) const {
  return {masks_.data() + static_cast<std::size_t>(v) * mask_words_,
          mask_words_};
}

IdSet CoverageInstance::all_ids() const {
  IdSet ids(m());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = static_cast<ElementId>(i);
  }
  return ids;
}

std::int64_t coverage_eval(const CoverageInstance& inst,
                           std::span<const ElementId> s) {
  return inst.f_value(s);
}

CoverageInstance gen_random_coverage(const GeneratorConfig& cfg) {
  if (cfg.m == 0 || cfg.universe_size == 0) {
    throw ConfigError("generator requires m > 0 and universe_size > 0");
  }
  if (!(cfg.density > 0.0) || cfg.density > 1.0) {
    throw ConfigError("density must be in (0, 1]");
  }
  if (!(cfg.cost_low > 0.0) || cfg.cost_low > cfg.cost_high) {
    throw ConfigError("need 0 < cost_low <= cost_high");
  }
  if (!(cfg.k_fraction > 0.0) || cfg.k_fraction > 1.0) {
    throw ConfigError("k_fraction must be in (0, 1]");
  }

  StreamRng root(cfg.seed);

  std::vector<IdSet> covers(cfg.m);
  StreamRng cover_rng = root.child(1);
  for (std::size_t v = 0; v < cfg.m; ++v) {
    StreamRng row = cover_rng.child(v);
    for (std::size_t u = 0; u < cfg.universe_size; ++u) {
      if (row.unit() < cfg.density) {
        covers[v].push_back(static_cast<ElementId>(u));
      }
    }
  }

  // Resample uncovered items onto a random element so f(V) spans the whole
  // universe.
  std::vector<bool> covered(cfg.universe_size, false);
  for (const auto& cov : covers) {
    for (ElementId u : cov) covered[u] = true;
  }
  StreamRng patch_rng = root.child(2);
  for (std::size_t u = 0; u < cfg.universe_size; ++u) {
    if (!covered[u]) {
      const auto v = static_cast<std::size_t>(patch_rng.below(cfg.m));
      covers[v].push_back(static_cast<ElementId>(u));
    }
  }
  for (auto& cov : covers) canonicalize(cov);

  // Log-uniform costs make extreme c_max/c_min spreads easy to construct.
  std::vector<double> costs(cfg.m);
  StreamRng cost_rng = root.child(3);
  const double lo = std::log(cfg.cost_low);
  const double hi = std::log(cfg.cost_high);
  for (std::size_t v = 0; v < cfg.m; ++v) {
    costs[v] = std::exp(lo + (hi - lo) * cost_rng.unit());
  }

  // Every item is covered, so f(V) equals the universe size (unit weights).
  const auto f_v = static_cast<std::int64_t>(cfg.universe_size);
  const auto k = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(cfg.k_fraction *
                                              static_cast<double>(f_v))));

  return CoverageInstance(cfg.universe_size, std::move(covers),
                          std::move(costs), k);
}

}  // namespace minsmc
