#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "incpar/dagmeter.hpp"
#include "incpar/exec.hpp"
#include "incpar/geomkit.hpp"
#include "incpar/order.hpp"

namespace incpar::delaunay2d {

constexpr std::uint32_t kNoRank = 0xFFFFFFFFu;

// One triangle record per ReplaceBoundary call (plus the bounding triangle).
// Records are immutable once created: a triangle's conflict set is fixed at
// creation, and a triangle belongs to the final triangulation iff that set
// is empty (any conflicting point eventually destroys it).
struct Triangle {
  std::array<std::uint32_t, 3> corners{};  // point ids, ccw; bounding ids are n..n+2
  std::vector<std::uint32_t> conflicts;    // insertion ranks, ascending
  std::uint32_t creator_rank = kNoRank;    // rank whose sub-step created it

  std::uint32_t min_conflict() const {
    return conflicts.empty() ? kNoRank : conflicts.front();
  }
};

// Unordered pair of point ids packed with the smaller id first.
inline std::uint64_t face_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct FaceSlots {
  std::int32_t t0 = -1;
  std::int32_t t1 = -1;
};

struct Triangulation {
  std::uint32_t n = 0;                       // input point count
  std::vector<geomkit::Point2D> pts;         // inputs plus the 3 bounding vertices
  std::vector<Triangle> tris;
  std::vector<std::uint8_t> alive;           // sequential bookkeeping
  std::unordered_map<std::uint64_t, FaceSlots> face_map;

  bool is_bounding(std::uint32_t point_id) const { return point_id >= n; }
};

struct DtResult {
  Triangulation tri;
  std::uint64_t incircle_count = 0;  // tests performed inside ReplaceBoundary
  std::uint32_t rounds = 0;          // parallel mode only
};

// Offline conflict-set incremental triangulation over the permutation order.
// The bounding triangle is placed 100x the input bounding-box diameter from
// its center; interior triangles are correct whenever no input circumcircle
// reaches the bounding vertices (always the case for non-adversarial data).
// Throws std::invalid_argument on duplicate points.  With a meter, one node
// is registered per triangle and each ReplaceBoundary records arcs from the
// one or two consumed triangles to the new one.
DtResult triangulate_seq(std::span<const geomkit::Point2D> points, const order::Permutation& perm,
                         dagmeter::IterationDag* meter = nullptr);

// Face-driven parallel variant: every face whose two attached triangles
// satisfy min(E(t)) < min(E(t_o)) fires ReplaceBoundary each round.  It
// performs exactly the sequential multiset of calls, so the final triangle
// set and the incircle count match triangulate_seq for every thread count.
DtResult triangulate_par(std::span<const geomkit::Point2D> points, const order::Permutation& perm,
                         exec::ThreadPool& pool);

struct Violation {
  std::array<std::uint32_t, 3> corners{};
  std::uint32_t point = 0;
};

// Brute-force empty-circumcircle check over all alive interior triangles
// (triangles touching the bounding vertices are stripped first).
std::pair<bool, std::vector<Violation>> validate_delaunay(const DtResult& result,
                                                          std::span<const geomkit::Point2D> points);

// Alive interior triangles as corner-id triples, each rotated so the
// smallest corner leads (ccw preserved), sorted; equal output here means
// equal triangulations.
std::vector<std::array<std::uint32_t, 3>> interior_triangles(const Triangulation& tri);

}  // namespace incpar::delaunay2d
