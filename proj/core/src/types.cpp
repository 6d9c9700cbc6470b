#include "minsmc/types.hpp"

#include <algorithm>

namespace minsmc {

double harmonic(std::int64_t n) {
  double h = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

bool is_canonical(const IdSet& ids) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) return false;
  }
  return true;
}

void canonicalize(IdSet& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

IdSet set_union(const IdSet& a, const IdSet& b) {
  IdSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace minsmc
