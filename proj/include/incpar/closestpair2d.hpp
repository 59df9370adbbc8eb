#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "incpar/exec.hpp"
#include "incpar/geomkit.hpp"
#include "incpar/order.hpp"

namespace incpar::closestpair2d {

// Uniform grid with cell side r (the current closest distance).  Cell keys
// are the floor-divided coordinates truncated to 32 bits each and packed
// into one 64-bit word; negative coordinates floor toward -infinity.  While
// r is the closest distance among the stored points, no cell can hold more
// than nine points.
struct PairGrid {
  double r = 0.0;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> table;  // cell -> point ids
  std::size_t count = 0;

  static std::uint64_t cell_key(double x, double y, double r);
  void insert(const geomkit::Point2D& p);
};

// All of `members` (point ids into `pts`) hashed under cell size r; r > 0.
PairGrid grid_rebuild(std::span<const geomkit::Point2D> pts,
                      std::span<const std::uint32_t> members, double r);

struct CpResult {
  std::uint32_t a = 0;  // point ids, a < b
  std::uint32_t b = 0;
  double dist = 0.0;
  std::uint64_t rebuilds = 0;  // grid rebuilds after the two-point initialization
  exec::RoundTrace trace;      // parallel mode only
};

// Inserts points in permutation order, keeping the grid keyed by the
// closest distance so far.  Each insertion inspects its cell and the eight
// neighbors; an insertion that shrinks r rebuilds the grid.  Equal squared
// distances tie-break to the lexicographically smaller (min id, max id)
// pair.  A zero distance (duplicate coordinates) returns immediately.
// Throws std::invalid_argument for n < 2.
CpResult closest_pair_seq(std::span<const geomkit::Point2D> pts, const order::Permutation& perm);

// Prefix-doubled version: non-shrinking insertions in a block run
// concurrently against the frozen grid; candidate checks also consult a
// per-sub-round grid over the pending block restricted to earlier ranks, so
// the earliest shrinking step found by the min-reduction is exactly the
// sequential one.  Result identical to closest_pair_seq.
CpResult closest_pair_par(std::span<const geomkit::Point2D> pts, const order::Permutation& perm,
                          exec::ThreadPool& pool);

}  // namespace incpar::closestpair2d
