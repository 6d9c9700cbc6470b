#include "minsmc/oracle.hpp"

#include <algorithm>
#include <atomic>

#include "minsmc/exec.hpp"

namespace minsmc {

namespace {

// Fallback accumulator: keeps the id list and re-evaluates on demand.
class GenericAccumulator : public OracleAccumulator {
 public:
  explicit GenericAccumulator(const SetFunctionOracle& f) : f_(&f) {}

  void clear() override { ids_.clear(); }
  void add(ElementId v) override { ids_.push_back(v); }
  std::int64_t value() const override { return f_->eval(ids_); }

  void assign(const OracleAccumulator& other) override {
    const auto& o = static_cast<const GenericAccumulator&>(other);
    f_ = o.f_;
    ids_ = o.ids_;
  }

  std::unique_ptr<OracleAccumulator> clone() const override {
    return std::make_unique<GenericAccumulator>(*this);
  }

 private:
  const SetFunctionOracle* f_;
  IdSet ids_;
};

}  // namespace

std::unique_ptr<OracleAccumulator> SetFunctionOracle::make_accumulator()
    const {
  return std::make_unique<GenericAccumulator>(*this);
}

std::int64_t truncated_value(const SetFunctionOracle& f, std::int64_t k,
                             std::span<const ElementId> s) {
  return std::min(f.eval(s), k);
}

TruncatedOracle::TruncatedOracle(const SetFunctionOracle& f, std::int64_t k,
                                 QueryLedger& ledger)
    : f_(f), k_(k), ledger_(ledger) {
  if (k < 0) throw ContractError("truncation demand must be nonnegative");
}

std::int64_t TruncatedOracle::eval(std::span<const ElementId> s) const {
  ledger_.record_queries(1);
  return truncated_value(f_, k_, s);
}

std::int64_t TruncatedOracle::value_uncounted(
    std::span<const ElementId> s) const {
  return truncated_value(f_, k_, s);
}

std::int64_t truncated_eval(const SetFunctionOracle& f, std::int64_t k,
                            std::span<const ElementId> s,
                            QueryLedger& ledger) {
  ledger.record_queries(1);
  return truncated_value(f, k, s);
}

std::int64_t marginal(const TruncatedOracle& g, std::span<const ElementId> b,
                      ElementId v) {
  if (std::find(b.begin(), b.end(), v) != b.end()) {
    return 0;
  }
  IdSet with(b.begin(), b.end());
  with.push_back(v);
  const std::int64_t joined = g.eval(with);
  const std::int64_t base = g.eval(b);
  return joined - base;
}

BatchMarginals batch_marginals(const TruncatedOracle& g,
                               std::span<const ElementId> b,
                               std::span<const ElementId> candidates) {
  if (candidates.empty()) {
    throw ContractError("batch_marginals: empty candidate set");
  }
  RoundScope round(g.ledger());

  BatchMarginals out;
  out.gains.assign(candidates.size(), 0);

  auto base_acc = g.inner().make_accumulator();
  for (ElementId v : b) base_acc->add(v);
  const std::int64_t raw_base = base_acc->value();
  out.base = std::min(raw_base, g.demand());

  std::atomic<std::uint64_t> evals{1};  // the shared base
  parallel_for(candidates.size(), [&](std::size_t lo, std::size_t hi) {
    auto acc = g.inner().make_accumulator();
    std::uint64_t local = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      acc->assign(*base_acc);
      acc->add(candidates[i]);
      const std::int64_t with = std::min(acc->value(), g.demand());
      out.gains[i] = with - out.base;
      ++local;
    }
    evals.fetch_add(local, std::memory_order_relaxed);
  });
  round.record(evals.load());
  return out;
}

MarginalShiftOracle::MarginalShiftOracle(const SetFunctionOracle& inner,
                                         IdSet base)
    : inner_(inner), base_(std::move(base)) {
  canonicalize(base_);
  base_value_ = inner_.eval(base_);
}

std::int64_t MarginalShiftOracle::eval(std::span<const ElementId> s) const {
  IdSet joined(base_);
  joined.insert(joined.end(), s.begin(), s.end());
  return inner_.eval(joined) - base_value_;
}

namespace {

class ShiftAccumulator : public OracleAccumulator {
 public:
  // Takes the inner accumulator as-is; callers preload the base themselves
  // (make_accumulator) or hand over already-valid state (clone).
  ShiftAccumulator(std::unique_ptr<OracleAccumulator> inner,
                   const IdSet* base, std::int64_t base_value)
      : inner_(std::move(inner)), base_(base), base_value_(base_value) {}

  void clear() override { reload(); }
  void add(ElementId v) override { inner_->add(v); }
  std::int64_t value() const override {
    return inner_->value() - base_value_;
  }

  void assign(const OracleAccumulator& other) override {
    const auto& o = static_cast<const ShiftAccumulator&>(other);
    base_ = o.base_;
    base_value_ = o.base_value_;
    inner_->assign(*o.inner_);
  }

  std::unique_ptr<OracleAccumulator> clone() const override {
    return std::make_unique<ShiftAccumulator>(inner_->clone(), base_,
                                              base_value_);
  }

 private:
  void reload() {
    inner_->clear();
    for (ElementId v : *base_) inner_->add(v);
  }

  std::unique_ptr<OracleAccumulator> inner_;
  const IdSet* base_;
  std::int64_t base_value_;
};

}  // namespace

std::unique_ptr<OracleAccumulator> MarginalShiftOracle::make_accumulator()
    const {
  auto acc = std::make_unique<ShiftAccumulator>(inner_.make_accumulator(),
                                                &base_, base_value_);
  acc->clear();  // preload the base set
  return acc;
}

}  // namespace minsmc
