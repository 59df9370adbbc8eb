#include "incpar/seb2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace incpar::seb2d {

namespace {

// The running disk is carried purely by its support points; numeric center
// and radius are derived once at the end.  All control flow below runs on
// exact predicates.
struct Support {
  std::array<std::uint32_t, 3> ids{};  // point indices
  std::uint8_t size = 0;
};

bool outside(std::span<const geomkit::Point2D> pts, const Support& s,
             const geomkit::Point2D& q) {
  if (s.size == 2)
    return geomkit::diametral_side(pts[s.ids[0]], pts[s.ids[1]], q) > 0;
  return geomkit::incircle(pts[s.ids[0]], pts[s.ids[1]], pts[s.ids[2]], q) < 0;
}

// Shared by both modes: given a violator scanner over rank ranges, run the
// two-level update structure.  find(lo, hi, support) returns the earliest
// rank in [lo, hi) strictly outside the support's disk, or hi if none.
template <class FindFn>
void run_updates(std::span<const geomkit::Point2D> pts, const order::Permutation& perm,
                 Support& cur, std::size_t i, SebState& st, FindFn&& find) {
  st.update1_calls += 1;
  cur = Support{{perm.order[0], perm.order[i], 0}, 2};
  for (;;) {
    const std::size_t j = find(std::size_t{1}, i, cur);
    if (j >= i) break;
    st.update2_calls += 1;
    Support s{{perm.order[i], perm.order[j], 0}, 2};
    for (;;) {
      const std::size_t k = find(std::size_t{0}, j, s);
      if (k >= j) break;
      s = Support{{perm.order[i], perm.order[j], perm.order[k]}, 3};
    }
    cur = s;
  }
}

SebState finish(std::span<const geomkit::Point2D> pts, const Support& cur, SebState st) {
  st.support_size = cur.size;
  for (std::uint8_t i = 0; i < cur.size; ++i) st.support[i] = cur.ids[i];
  std::sort(st.support.begin(), st.support.begin() + cur.size);
  if (cur.size == 2) {
    st.disk = disk_from_2(pts[cur.ids[0]], pts[cur.ids[1]]);
  } else {
    const auto d = disk_from_3(pts[cur.ids[0]], pts[cur.ids[1]], pts[cur.ids[2]]);
    if (!d) throw std::logic_error("seb2d: collinear support");
    st.disk = *d;
  }
  return st;
}

}  // namespace

geomkit::Disk disk_from_2(const geomkit::Point2D& p, const geomkit::Point2D& q) {
  geomkit::Disk d;
  d.cx = 0.5 * (p.x + q.x);
  d.cy = 0.5 * (p.y + q.y);
  const double dx = p.x - d.cx, dy = p.y - d.cy;
  d.radius = std::sqrt(dx * dx + dy * dy);
  return d;
}

std::optional<geomkit::Disk> disk_from_3(const geomkit::Point2D& p, const geomkit::Point2D& q,
                                         const geomkit::Point2D& r) {
  return geomkit::circumdisk(p, q, r);
}

SebState seb_seq(std::span<const geomkit::Point2D> pts, const order::Permutation& perm) {
  const std::uint32_t n = perm.size();
  if (pts.size() != n) throw std::invalid_argument("seb: size mismatch");
  if (n < 2) throw std::invalid_argument("seb: need at least 2 points");

  SebState st;
  Support cur{{perm.order[0], perm.order[1], 0}, 2};
  auto find = [&](std::size_t lo, std::size_t hi, const Support& s) {
    for (std::size_t r = lo; r < hi; ++r)
      if (outside(pts, s, pts[perm.order[r]])) return r;
    return hi;
  };
  for (std::size_t i = 2; i < n; ++i)
    if (outside(pts, cur, pts[perm.order[i]])) run_updates(pts, perm, cur, i, st, find);
  return finish(pts, cur, st);
}

SebState seb_par(std::span<const geomkit::Point2D> pts, const order::Permutation& perm,
                 exec::ThreadPool& pool) {
  const std::uint32_t n = perm.size();
  if (pts.size() != n) throw std::invalid_argument("seb: size mismatch");
  if (n < 2) throw std::invalid_argument("seb: need at least 2 points");

  SebState st;
  Support cur{};
  constexpr std::size_t kSentinel = std::numeric_limits<std::size_t>::max();

  // Earliest point outside the support's disk, by doubling windows of
  // fixed-block min-reductions: work stays proportional to the distance to
  // the violator while the reduction shape is thread-count independent.
  auto find = [&](std::size_t lo, std::size_t hi, const Support& s) {
    std::size_t window = 64, start = lo;
    while (start < hi) {
      const std::size_t end = std::min(hi, start + window);
      const std::size_t found = exec::blocked_reduce(
          pool, start, end, 64, kSentinel,
          [&](std::size_t blo, std::size_t bhi) {
            for (std::size_t r = blo; r < bhi; ++r)
              if (outside(pts, s, pts[perm.order[r]])) return r;
            return kSentinel;
          },
          [](std::size_t a, std::size_t b) { return std::min(a, b); });
      if (found != kSentinel) return found;
      start = end;
      window *= 2;
    }
    return hi;
  };

  st.trace = exec::run_type2(
      pool, n,
      [&](std::size_t k) {
        if (k == 1) return true;
        return outside(pts, cur, pts[perm.order[k]]);
      },
      [](std::size_t) {},
      [&](std::size_t k) {
        if (k == 0) return;
        if (k == 1) {
          cur = Support{{perm.order[0], perm.order[1], 0}, 2};
          return;
        }
        run_updates(pts, perm, cur, k, st, find);
      });
  return finish(pts, cur, st);
}

}  // namespace incpar::seb2d
