#ifndef MINSMC_LEDGER_HPP_
#define MINSMC_LEDGER_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "minsmc/types.hpp"

namespace minsmc {

// Adaptive-round and query accounting. One open round at a time; every query
// must land inside an open round. Queries inside a round may be issued
// concurrently and merged at the round boundary, so per-round counts are
// recorded in bulk.
class QueryLedger {
 public:
  void begin_round();
  void end_round();

  // Adds n queries to the currently open round.
  void record_queries(std::uint64_t n);

  bool round_open() const { return open_; }
  std::uint64_t rounds() const { return per_round_.size(); }
  std::uint64_t queries() const { return total_; }
  const std::vector<std::uint64_t>& per_round_queries() const {
    return per_round_;
  }

 private:
  std::vector<std::uint64_t> per_round_;
  std::uint64_t total_ = 0;
  bool open_ = false;
};

std::pair<std::uint64_t, std::uint64_t> ledger_snapshot(
    const QueryLedger& ledger);

// Scoped round. With `lazy`, the round is opened only when the first query
// arrives, so an all-cached step does not consume a round.
class RoundScope {
 public:
  explicit RoundScope(QueryLedger& ledger, bool lazy = false);
  ~RoundScope();

  RoundScope(const RoundScope&) = delete;
  RoundScope& operator=(const RoundScope&) = delete;

  void record(std::uint64_t n);
  bool opened() const { return opened_; }

 private:
  QueryLedger& ledger_;
  bool opened_ = false;
};

}  // namespace minsmc

#endif  // MINSMC_LEDGER_HPP_
