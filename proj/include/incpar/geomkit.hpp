#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace incpar::geomkit {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
  std::uint32_t id = 0;
};

struct Disk {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
};

// Sign of the 2x2 determinant (b-a) x (c-a): +1 counterclockwise,
// -1 clockwise, 0 collinear.  Exact for all finite double inputs: a static
// floating-point filter handles the common case and an exact rational
// evaluation takes over when the filter's error bound is not cleared.
int orient2d(const Point2D& a, const Point2D& b, const Point2D& c);

// +1 iff d is strictly inside the circumcircle of (a, b, c), -1 strictly
// outside, 0 on the circle.  The orientation of (a, b, c) is normalized to
// counterclockwise internally; exact sign, same filter/fallback scheme.
// Throws std::invalid_argument when (a, b, c) are collinear.
int incircle(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d);

// Sign of (p-a).(p-b): +1 iff p is strictly outside the circle with
// diameter (a, b), 0 on it, -1 strictly inside.  Exact.
int diametral_side(const Point2D& a, const Point2D& b, const Point2D& p);

// Circle through three non-collinear points; nullopt when collinear.
std::optional<Disk> circumdisk(const Point2D& a, const Point2D& b, const Point2D& c);

// Delaunay encroachment with the cocircular tie-break: p encroaches on
// triangle (a, b, c) if it is strictly inside the circumcircle, or exactly
// on it with an id above every corner id (a lower id never encroaches on a
// tie, which restores general position deterministically).
bool encroaches(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& p);

// One "x y" pair per line (64-bit float syntax), ids assigned by line
// order.  Blank lines are ignored.  Throws std::runtime_error with the
// offending line number on malformed input or non-finite coordinates.
std::vector<Point2D> parse_points(std::istream& in);

}  // namespace incpar::geomkit
