#include "minsmc/report.hpp"

namespace minsmc {

std::uint64_t RunReport::round_bound(std::uint64_t preprocess_rounds) const {
  std::uint64_t bucket_budget = 0;
  if (params.has_value()) {
    bucket_budget = static_cast<std::uint64_t>(params->T) *
                    static_cast<std::uint64_t>(params->ell) *
                    static_cast<std::uint64_t>(params->r + 2);
  }
  return 2 + preprocess_rounds + bucket_budget;
}

}  // namespace minsmc
