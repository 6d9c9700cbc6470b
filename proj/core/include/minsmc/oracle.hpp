#ifndef MINSMC_ORACLE_HPP_
#define MINSMC_ORACLE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "minsmc/ledger.hpp"
#include "minsmc/types.hpp"

namespace minsmc {

// Running union state over one oracle: lets hot loops evaluate f(S ∪ {v})
// incrementally instead of rebuilding S from scratch. Concrete oracles may
// provide an efficient implementation; the generic fallback re-evaluates.
class OracleAccumulator {
 public:
  virtual ~OracleAccumulator() = default;

  virtual void clear() = 0;
  virtual void add(ElementId v) = 0;
  virtual std::int64_t value() const = 0;

  // Copies state from another accumulator of the same concrete type.
  virtual void assign(const OracleAccumulator& other) = 0;
  virtual std::unique_ptr<OracleAccumulator> clone() const = 0;
};

// Monotone nondecreasing, integer-valued submodular set function. Oracles
// are pure functions of the input set: no hidden state, safe for concurrent
// reads.
class SetFunctionOracle {
 public:
  virtual ~SetFunctionOracle() = default;

  virtual std::size_t ground_size() const = 0;

  // f(S). Input may be in any order; duplicates are ignored.
  virtual std::int64_t eval(std::span<const ElementId> s) const = 0;

  // Fast incremental evaluator; default delegates to eval().
  virtual std::unique_ptr<OracleAccumulator> make_accumulator() const;
};

// min(f(S), k) with no ledger interaction; shared by counted and test paths.
std::int64_t truncated_value(const SetFunctionOracle& f, std::int64_t k,
                             std::span<const ElementId> s);

// g(S) = min(f(S), k): the truncation that turns cover demand into
// g(S) = g(V). Evaluations are counted as oracle queries against a ledger.
class TruncatedOracle {
 public:
  TruncatedOracle(const SetFunctionOracle& f, std::int64_t k,
                  QueryLedger& ledger);

  // One counted query; requires an open round.
  std::int64_t eval(std::span<const ElementId> s) const;

  // As eval(), but with caller-managed query recording (bulk paths).
  std::int64_t value_uncounted(std::span<const ElementId> s) const;

  std::int64_t demand() const { return k_; }
  const SetFunctionOracle& inner() const { return f_; }
  QueryLedger& ledger() const { return ledger_; }

 private:
  const SetFunctionOracle& f_;
  std::int64_t k_;
  QueryLedger& ledger_;
};

// min(f(S), k), recording one query in the open round.
std::int64_t truncated_eval(const SetFunctionOracle& f, std::int64_t k,
                            std::span<const ElementId> s,
                            QueryLedger& ledger);

// Marginal profit g_B(v) = g(B ∪ {v}) − g(B). Two counted queries. Zero when
// v ∈ B.
std::int64_t marginal(const TruncatedOracle& g, std::span<const ElementId> b,
                      ElementId v);

struct BatchMarginals {
  std::int64_t base = 0;            // g(B)
  std::vector<std::int64_t> gains;  // aligned with the candidate span
};

// Evaluates g_B(v) for every candidate in one adaptive round. The shared
// base g(B) is evaluated once, so the round costs |C| + 1 queries.
// Candidate evaluations may run concurrently; the result is identical to
// sequential evaluation.
BatchMarginals batch_marginals(const TruncatedOracle& g,
                               std::span<const ElementId> b,
                               std::span<const ElementId> candidates);

// Marginal-shift view f'(S) = f(S ∪ base) − f(base): the residual function
// solved after preprocessing pins a base set. Monotone, submodular,
// integer-valued, and f'(∅) = 0.
class MarginalShiftOracle : public SetFunctionOracle {
 public:
  MarginalShiftOracle(const SetFunctionOracle& inner, IdSet base);

  std::size_t ground_size() const override { return inner_.ground_size(); }
  std::int64_t eval(std::span<const ElementId> s) const override;
  std::unique_ptr<OracleAccumulator> make_accumulator() const override;

  std::int64_t base_value() const { return base_value_; }

 private:
  const SetFunctionOracle& inner_;
  IdSet base_;
  std::int64_t base_value_;
};

}  // namespace minsmc

#endif  // MINSMC_ORACLE_HPP_
