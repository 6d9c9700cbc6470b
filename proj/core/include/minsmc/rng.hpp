#ifndef MINSMC_RNG_HPP_
#define MINSMC_RNG_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "minsmc/types.hpp"

namespace minsmc {

// Counter-based deterministic generator. Every stream is identified by a
// master seed plus a path of child keys, so draws are independent of
// scheduling and worker count: the value of draw #n in a stream depends only
// on (seed, path, n).
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed);

  // Derives an independent substream. Re-keying resets the draw counter.
  StreamRng child(std::uint64_t key) const;

  std::uint64_t next();

  // Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [0, 1).
  double unit();

 private:
  StreamRng(std::uint64_t base, int) : base_(base) {}

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

// Draws a uniform k-subset of `pool` (without replacement), appending the
// chosen elements to `out` in draw order. Uses a partial Fisher-Yates shuffle
// over a scratch index buffer.
void sample_without_replacement(std::span<const ElementId> pool,
                                std::size_t k, StreamRng& rng, IdSet& out);

}  // namespace minsmc

#endif  // MINSMC_RNG_HPP_
