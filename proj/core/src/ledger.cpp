#include "minsmc/ledger.hpp"

namespace minsmc {

void QueryLedger::begin_round() {
  if (open_) throw LedgerMisuseError("begin_round: a round is already open");
  per_round_.push_back(0);
  open_ = true;
}

void QueryLedger::end_round() {
  if (!open_) throw LedgerMisuseError("end_round: no open round");
  open_ = false;
}

void QueryLedger::record_queries(std::uint64_t n) {
  if (!open_) throw LedgerMisuseError("query issued with no open round");
  per_round_.back() += n;
  total_ += n;
}

std::pair<std::uint64_t, std::uint64_t> ledger_snapshot(
    const QueryLedger& ledger) {
  return {ledger.rounds(), ledger.queries()};
}

RoundScope::RoundScope(QueryLedger& ledger, bool lazy) : ledger_(ledger) {
  if (!lazy) {
    ledger_.begin_round();
    opened_ = true;
  }
}

RoundScope::~RoundScope() {
  if (opened_) ledger_.end_round();
}

void RoundScope::record(std::uint64_t n) {
  if (n == 0) return;
  if (!opened_) {
    ledger_.begin_round();
    opened_ = true;
  }
  ledger_.record_queries(n);
}

}  // namespace minsmc
