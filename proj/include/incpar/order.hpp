#pragma once

#include <cstdint>
#include <vector>

namespace incpar::order {

// Counter-based 64-bit generator (SplitMix64).  The state advances by the
// golden-ratio constant on every draw and the output is a bijective mix of
// the state, so (seed, draw index) -> value is a pure function that is
// identical on every platform.  All randomness in this project flows
// through this generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Unbiased draw in [0, n) by rejection sampling: draws below
  // 2^64 mod n are discarded so that the accepted range is an exact
  // multiple of n.  n must be > 0.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform double in [0, 1), from the top 53 bits of next_u64().
  double unit();

  // Uniform double in (0, 1]; used for positive edge weights.
  double unit_positive();

  // Independent derived stream: Rng(mix(state + (tag + 1) * gamma)).
  Rng split(std::uint64_t tag) const;

 private:
  std::uint64_t state_;
};

// A seeded random insertion order over n elements.
// `order[step]` is the element inserted at that step, `inverse` is the
// rank (step index) of each element.
struct Permutation {
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> inverse;

  std::uint32_t size() const { return static_cast<std::uint32_t>(order.size()); }
};

// Fisher-Yates shuffle of [0, n) driven by Rng(seed): starting from the
// identity, for i = n-1 down to 1, swap order[i] with order[bounded(i+1)].
Permutation seeded_permutation(std::uint32_t n, std::uint64_t seed);

// Step index i such that perm.order[i] == element.
// Throws std::out_of_range if element is not in [0, n).
std::uint32_t rank_of(const Permutation& perm, std::uint32_t element);

}  // namespace incpar::order
