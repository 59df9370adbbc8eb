#include "incpar/datasets.hpp"

#include <cmath>
#include <numbers>

#include "incpar/order.hpp"

namespace incpar::datasets {

std::vector<geomkit::Point2D> random_points(std::uint32_t n, std::uint64_t seed) {
  order::Rng rng(seed);
  std::vector<geomkit::Point2D> pts(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    pts[i].x = rng.unit();
    pts[i].y = rng.unit();
    pts[i].id = i;
  }
  return pts;
}

std::vector<lp2d::Halfplane> tangent_halfplanes(std::uint32_t n, std::uint64_t seed) {
  order::Rng rng(seed);
  std::vector<lp2d::Halfplane> hs(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * rng.unit();
    hs[i] = lp2d::Halfplane{std::cos(theta), std::sin(theta), 1.0};
  }
  return hs;
}

std::vector<double> random_keys(std::uint32_t n, std::uint64_t seed) {
  order::Rng rng(seed);
  std::vector<double> keys(n);
  for (std::uint32_t i = 0; i < n; ++i) keys[i] = rng.unit();
  return keys;
}

}  // namespace incpar::datasets
