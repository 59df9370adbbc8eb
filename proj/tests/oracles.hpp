#pragma once

// Independent reference implementations used as test oracles.  These stay
// deliberately naive (full enumeration, textbook algorithms, arbitrary
// precision) and share no code with the library paths they check.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "incpar/geomkit.hpp"
#include "incpar/graphcore.hpp"
#include "incpar/lp2d.hpp"

namespace oracles {

// Predicate signs in exact rational arithmetic via a straight 3x3 / 4x4
// cofactor expansion (no translation tricks).
int orient2d_ref(const incpar::geomkit::Point2D& a, const incpar::geomkit::Point2D& b,
                 const incpar::geomkit::Point2D& c);
int incircle_ref(const incpar::geomkit::Point2D& a, const incpar::geomkit::Point2D& b,
                 const incpar::geomkit::Point2D& c, const incpar::geomkit::Point2D& d);

// Minimum pairwise squared distance by full enumeration.
double closest_pair_dist2_ref(std::span<const incpar::geomkit::Point2D> pts);

// Smallest enclosing disk radius: minimum over all pair-diameter and
// triple-circumscribed candidate disks that contain every point.  Points
// are reduced to their convex hull first (the support is always extreme),
// which keeps the enumeration honest but affordable.
double seb_radius_ref(std::span<const incpar::geomkit::Point2D> pts);

// Best objective value over all feasible constraint-pair intersections of
// the augmented system (user constraints plus the solver's two bounds);
// nullopt when no feasible vertex exists.
std::optional<double> lp_best_value_ref(std::span<const incpar::lp2d::Halfplane> user,
                                        std::pair<double, double> objective);

// Kosaraju's two-pass SCC labeling (independent of the Tarjan oracle).
std::vector<std::uint32_t> kosaraju_ref(const incpar::graphcore::Graph& g);

// Delaunay triangles by definition: every point triple whose circumcircle
// strictly contains no other input point, in the canonical corner form.
// Usable on small inputs in general position.
std::vector<std::array<std::uint32_t, 3>> delaunay_triangles_ref(
    std::span<const incpar::geomkit::Point2D> pts);

}  // namespace oracles
