#include "minsmc/rng.hpp"

#include <limits>

namespace minsmc {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed) : base_(splitmix64(seed)) {}

StreamRng StreamRng::child(std::uint64_t key) const {
  return StreamRng(splitmix64(base_ ^ splitmix64(key ^ kGolden)), 0);
}

std::uint64_t StreamRng::next() { return splitmix64(base_ + counter_++); }

std::uint64_t StreamRng::below(std::uint64_t n) {
  if (n == 0) throw ContractError("StreamRng::below(0)");
  if (n == 1) return 0;
  // Rejection sampling over the largest multiple of n.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v > limit);
  return v % n;
}

double StreamRng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void sample_without_replacement(std::span<const ElementId> pool,
                                std::size_t k, StreamRng& rng, IdSet& out) {
  const std::size_t n = pool.size();
  if (k > n) throw ContractError("sample size exceeds pool size");
  std::vector<std::uint32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(idx[i], idx[j]);
    out.push_back(pool[idx[i]]);
  }
}

}  // namespace minsmc
