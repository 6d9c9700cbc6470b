#ifndef MINSMC_TYPES_HPP_
#define MINSMC_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minsmc {

// Dense element index in [0, m).
using ElementId = std::uint32_t;

// A set of element ids. Solver-facing sets are kept sorted and duplicate-free;
// oracle eval accepts any order and ignores duplicates.
using IdSet = std::vector<ElementId>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Demand k cannot be met by the ground set (k > f(V)). CLI exit code 2.
struct InfeasibleDemandError : Error {
  using Error::Error;
};

// Invalid configuration: epsilon out of range, bad generator parameters,
// malformed bench config. CLI exit code 3.
struct ConfigError : Error {
  using Error::Error;
};

// Caller broke an operation precondition (empty candidate set, sample size
// out of range, ...).
struct ContractError : Error {
  using Error::Error;
};

// Refusal: the requested exhaustive computation exceeds its size budget.
struct BudgetError : Error {
  using Error::Error;
};

// Malformed input data: schema violations, out-of-range ids, nonpositive
// costs. CLI exit code 4 together with file I/O failures.
struct InputError : Error {
  using Error::Error;
};

// A query was issued with no open adaptive round, or round bookkeeping was
// misused.
struct LedgerMisuseError : Error {
  using Error::Error;
};

// H(n) = sum_{i=1}^{n} 1/i, the approximation-ratio currency.
double harmonic(std::int64_t n);

// True if `ids` is sorted ascending with no duplicates.
bool is_canonical(const IdSet& ids);

// Sorts and deduplicates in place.
void canonicalize(IdSet& ids);

// Union of two canonical id sets.
IdSet set_union(const IdSet& a, const IdSet& b);

}  // namespace minsmc

#endif  // MINSMC_TYPES_HPP_
