#include "minsmc/solution.hpp"

namespace minsmc {

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::kGreedy:
      return "greedy";
    case Algo::kExact:
      return "exact";
    case Algo::kMinsmcPar:
      return "minsmc-par";
    case Algo::kMinsmcMain:
      return "minsmc";
  }
  return "unknown";
}

std::optional<Algo> algo_from_name(std::string_view name) {
  if (name == "greedy") return Algo::kGreedy;
  if (name == "exact") return Algo::kExact;
  if (name == "minsmc-par") return Algo::kMinsmcPar;
  if (name == "minsmc" || name == "minsmc-main") return Algo::kMinsmcMain;
  return std::nullopt;
}

}  // namespace minsmc
