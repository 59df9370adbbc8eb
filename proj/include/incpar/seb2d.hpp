#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "incpar/exec.hpp"
#include "incpar/geomkit.hpp"
#include "incpar/order.hpp"

namespace incpar::seb2d {

struct SebState {
  geomkit::Disk disk;
  std::array<std::uint32_t, 3> support{};  // point ids, ascending; [support_size) valid
  std::uint8_t support_size = 0;
  std::uint64_t update1_calls = 0;
  std::uint64_t update2_calls = 0;
  exec::RoundTrace trace;  // parallel mode only
};

// Diameter disk of two points.
geomkit::Disk disk_from_2(const geomkit::Point2D& p, const geomkit::Point2D& q);

// Circumdisk of three points; nullopt when collinear.
std::optional<geomkit::Disk> disk_from_3(const geomkit::Point2D& p, const geomkit::Point2D& q,
                                         const geomkit::Point2D& r);

// Welzl's incremental smallest enclosing disk over the permutation order.
// The running disk is always carried by 2 or 3 support points, and "outside"
// tests are exact sign predicates on the support, so boundary points count
// as inside and the update loops cannot cycle.  A point outside the disk
// triggers the first-level rescan (Update1); inside it, a point outside the
// two-support disk triggers the second-level rescan (Update2).  Throws
// std::invalid_argument for n < 2.
SebState seb_seq(std::span<const geomkit::Point2D> pts, const order::Permutation& perm);

// Prefix-doubled at the step level; the Update1/Update2 scans find the
// earliest outside point with doubling-window min-reductions.  The sequence
// of disk updates is identical to seb_seq's, so the result is bitwise equal.
SebState seb_par(std::span<const geomkit::Point2D> pts, const order::Permutation& perm,
                 exec::ThreadPool& pool);

}  // namespace incpar::seb2d
