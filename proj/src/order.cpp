#include "incpar/order.hpp"

#include <stdexcept>
#include <utility>

namespace incpar::order {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

std::uint64_t Rng::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::bounded: n must be > 0");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

double Rng::unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::unit_positive() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

Rng Rng::split(std::uint64_t tag) const {
  return Rng(mix64(state_ + (tag + 1) * kGamma));
}

Permutation seeded_permutation(std::uint32_t n, std::uint64_t seed) {
  Permutation perm;
  perm.seed = seed;
  perm.order.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) perm.order[i] = i;
  Rng rng(seed);
  for (std::uint32_t i = n; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(rng.bounded(i));
    std::swap(perm.order[i - 1], perm.order[j]);
  }
  perm.inverse.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) perm.inverse[perm.order[i]] = i;
  return perm;
}

std::uint32_t rank_of(const Permutation& perm, std::uint32_t element) {
  if (element >= perm.size())
    throw std::out_of_range("rank_of: element outside [0, n)");
  return perm.inverse[element];
}

}  // namespace incpar::order
