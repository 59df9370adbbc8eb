#pragma once

#include <cstdint>
#include <vector>

#include "incpar/geomkit.hpp"
#include "incpar/lp2d.hpp"

namespace incpar::datasets {

// Benchmark input generators used by the CLI and the test harness.  Each
// draws from Rng(seed) in a documented order so the instances can be
// reproduced independently.

// Points uniform in the unit square; per point, x then y.
std::vector<geomkit::Point2D> random_points(std::uint32_t n, std::uint64_t seed);

// Halfplanes tangent to the unit circle: angle theta = 2*pi*unit() per
// constraint, giving cos(theta)*x + sin(theta)*y <= 1.
std::vector<lp2d::Halfplane> tangent_halfplanes(std::uint32_t n, std::uint64_t seed);

// Distinct keys uniform in [0, 1).
std::vector<double> random_keys(std::uint32_t n, std::uint64_t seed);

}  // namespace incpar::datasets
