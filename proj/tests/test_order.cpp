#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "incpar/order.hpp"

using namespace incpar;

namespace {

// 20-line reference implementation, kept separate from the library: the
// documented SplitMix64 stream, rejection-sampled bounded draws, and the
// descending Fisher-Yates swap loop.
std::vector<std::uint32_t> reference_permutation(std::uint32_t n, std::uint64_t seed) {
  std::uint64_t s = seed;
  auto next = [&] {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  };
  auto bounded = [&](std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  };
  std::vector<std::uint32_t> ord(n);
  std::iota(ord.begin(), ord.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(ord[i - 1], ord[static_cast<std::uint32_t>(bounded(i))]);
  return ord;
}

}  // namespace

TEST_CASE("seeded_permutation trivial sizes") {
  CHECK(order::seeded_permutation(0, 7).order.empty());
  CHECK(order::seeded_permutation(1, 7).order == std::vector<std::uint32_t>{0});
  CHECK(order::seeded_permutation(1, 12345).order == std::vector<std::uint32_t>{0});
}

TEST_CASE("seeded_permutation matches the reference golden value") {
  const auto perm = order::seeded_permutation(8, 42);
  const std::vector<std::uint32_t> golden{3, 1, 6, 2, 4, 0, 7, 5};
  CHECK(perm.order == golden);
  CHECK(perm.order == reference_permutation(8, 42));
  CHECK(order::seeded_permutation(12, 42).order == reference_permutation(12, 42));
  for (const std::uint64_t seed : {1ull, 999ull, 0xDEADBEEFull})
    CHECK(order::seeded_permutation(100, seed).order == reference_permutation(100, seed));
}

TEST_CASE("permutation is a bijection for many (n, seed)") {
  for (std::uint32_t n : {0u, 1u, 2u, 5u, 17u, 100u, 1000u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto perm = order::seeded_permutation(n, seed);
      auto sorted = perm.order;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::uint32_t> identity(n);
      std::iota(identity.begin(), identity.end(), 0u);
      REQUIRE(sorted == identity);
    }
  }
}

TEST_CASE("rank_of is the inverse on both sides") {
  const auto perm = order::seeded_permutation(257, 99);
  for (std::uint32_t e = 0; e < perm.size(); ++e) {
    CHECK(perm.order[order::rank_of(perm, e)] == e);
    CHECK(order::rank_of(perm, perm.order[e]) == e);
  }
  CHECK(order::rank_of(order::Permutation{0, {2, 0, 1}, {1, 2, 0}}, 2) == 0);
  CHECK(order::rank_of(order::Permutation{0, {2, 0, 1}, {1, 2, 0}}, 1) == 2);
  CHECK_THROWS_AS((void)order::rank_of(perm, 257), std::out_of_range);
}

TEST_CASE("determinism: equal arguments, bit-identical output") {
  const auto a = order::seeded_permutation(513, 0x12345678);
  const auto b = order::seeded_permutation(513, 0x12345678);
  CHECK(a.order == b.order);
  CHECK(a.inverse == b.inverse);
}

TEST_CASE("bounded draws cover the range roughly uniformly") {
  order::Rng rng(7);
  std::vector<int> buckets(10, 0);
  for (int i = 0; i < 100000; ++i) buckets[rng.bounded(10)] += 1;
  for (const int b : buckets) {
    CHECK(b > 9000);
    CHECK(b < 11000);
  }
}

TEST_CASE("split streams are reproducible and distinct") {
  auto s1 = order::Rng(42).split(0);
  auto s2 = order::Rng(42).split(0);
  CHECK(s1.next_u64() == s2.next_u64());
  CHECK(order::Rng(42).split(0).next_u64() != order::Rng(42).split(1).next_u64());
}
