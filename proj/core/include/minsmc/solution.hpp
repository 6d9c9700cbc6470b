#ifndef MINSMC_SOLUTION_HPP_
#define MINSMC_SOLUTION_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "minsmc/types.hpp"

namespace minsmc {

enum class Algo {
  kGreedy,
  kExact,
  kMinsmcPar,
  kMinsmcMain,
};

std::string algo_name(Algo a);
std::optional<Algo> algo_from_name(std::string_view name);

struct Solution {
  IdSet chosen;  // sorted ascending
  double total_cost = 0.0;
  std::int64_t achieved = 0;  // g(chosen)
  Algo algorithm = Algo::kGreedy;
  std::optional<std::uint64_t> seed;
};

}  // namespace minsmc

#endif  // MINSMC_SOLUTION_HPP_
