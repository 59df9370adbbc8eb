#include "incpar/closestpair2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace incpar::closestpair2d {

namespace {

constexpr std::uint32_t kNone = 0xFFFFFFFFu;

std::pair<std::int64_t, std::int64_t> cell_coords(double x, double y, double r) {
  // Clamp before the cast; wrapped far-away cells only ever add candidates
  // whose real distances are computed anyway.
  auto one = [&](double v) {
    double f = std::floor(v / r);
    if (!(f > -9.0e18)) f = -9.0e18;
    if (!(f < 9.0e18)) f = 9.0e18;
    return static_cast<std::int64_t>(f);
  };
  return {one(x), one(y)};
}

std::uint64_t key_from_coords(std::int64_t cx, std::int64_t cy) {
  const auto tx = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cx));
  const auto ty = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cy));
  return (static_cast<std::uint64_t>(tx) << 32) | ty;
}

double dist2(const geomkit::Point2D& p, const geomkit::Point2D& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// Candidate pair ordered by (d2, min id, max id); min over this total order
// is independent of scan order.
struct Best {
  double d2 = std::numeric_limits<double>::infinity();
  std::uint32_t a = kNone, b = kNone;
};

Best make_pair_best(std::span<const geomkit::Point2D> pts, std::uint32_t i, std::uint32_t j) {
  Best out;
  out.d2 = dist2(pts[i], pts[j]);
  out.a = std::min(i, j);
  out.b = std::max(i, j);
  return out;
}

Best better(Best x, Best y) {
  if (y.d2 < x.d2) return y;
  if (x.d2 < y.d2) return x;
  if (y.a != x.a) return y.a < x.a ? y : x;
  return y.b < x.b ? y : x;
}

}  // namespace

std::uint64_t PairGrid::cell_key(double x, double y, double r) {
  const auto [cx, cy] = cell_coords(x, y, r);
  return key_from_coords(cx, cy);
}

void PairGrid::insert(const geomkit::Point2D& p) {
  auto& cell = table[cell_key(p.x, p.y, r)];
  cell.push_back(p.id);
  count += 1;
  if (cell.size() > 9)
    throw std::logic_error("PairGrid: cell bound exceeded (grid stale?)");
}

PairGrid grid_rebuild(std::span<const geomkit::Point2D> pts,
                      std::span<const std::uint32_t> members, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("grid_rebuild: r must be > 0");
  PairGrid g;
  g.r = r;
  g.table.reserve(members.size());
  for (const std::uint32_t id : members) g.insert(pts[id]);
  return g;
}

namespace {

// Best pair between p and any stored point in the 3x3 neighborhood.
Best scan_grid(const PairGrid& g, std::span<const geomkit::Point2D> pts,
               const geomkit::Point2D& p) {
  Best best;
  const auto [cx, cy] = cell_coords(p.x, p.y, g.r);
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      const auto it = g.table.find(key_from_coords(cx + dx, cy + dy));
      if (it == g.table.end()) continue;
      for (const std::uint32_t q : it->second)
        best = better(best, make_pair_best(pts, p.id, q));
    }
  }
  return best;
}

}  // namespace

CpResult closest_pair_seq(std::span<const geomkit::Point2D> pts, const order::Permutation& perm) {
  const std::uint32_t n = perm.size();
  if (pts.size() != n) throw std::invalid_argument("closest_pair: size mismatch");
  if (n < 2) throw std::invalid_argument("closest_pair: need at least 2 points");

  CpResult res;
  Best best = make_pair_best(pts, perm.order[0], perm.order[1]);
  auto publish = [&] {
    res.a = best.a;
    res.b = best.b;
    res.dist = std::sqrt(best.d2);
  };
  if (best.d2 == 0.0) {
    publish();
    return res;
  }

  std::vector<std::uint32_t> members(perm.order.begin(), perm.order.begin() + 2);
  PairGrid grid = grid_rebuild(pts, members, std::sqrt(best.d2));

  for (std::uint32_t step = 2; step < n; ++step) {
    const std::uint32_t id = perm.order[step];
    const Best cand = scan_grid(grid, pts, pts[id]);
    if (cand.d2 < best.d2) {
      res.rebuilds += 1;
      best = cand;
      if (best.d2 == 0.0) {
        publish();
        return res;
      }
      members.assign(perm.order.begin(), perm.order.begin() + step + 1);
      grid = grid_rebuild(pts, members, std::sqrt(best.d2));
    } else {
      best = better(best, cand);  // equal-distance tie may improve the pair ids
      grid.insert(pts[id]);
    }
  }
  publish();
  return res;
}

CpResult closest_pair_par(std::span<const geomkit::Point2D> pts, const order::Permutation& perm,
                          exec::ThreadPool& pool) {
  const std::uint32_t n = perm.size();
  if (pts.size() != n) throw std::invalid_argument("closest_pair: size mismatch");
  if (n < 2) throw std::invalid_argument("closest_pair: need at least 2 points");

  CpResult res;
  Best best;
  PairGrid grid;
  bool grid_ready = false;
  bool done_zero = false;
  std::size_t inserted_upto = 0;

  // Per-step candidate found during the check phase; slots are disjoint so
  // the check phase writes race-free, and the batch-insert phase replays
  // the equal-distance tie updates in step order.
  std::vector<Best> cand(n);

  // Cohort grid over the pending block [j, hi), keyed like the main grid
  // but holding ranks so checks can filter to earlier steps.  The nine-point
  // bound does not apply to pending points, so this is a plain table.
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cohort;

  auto scan_cohort = [&](const geomkit::Point2D& p, std::uint32_t rank_limit) {
    Best out;
    const auto [cx, cy] = cell_coords(p.x, p.y, grid.r);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = cohort.find(key_from_coords(cx + dx, cy + dy));
        if (it == cohort.end()) continue;
        for (const std::uint32_t rank : it->second)
          if (rank < rank_limit)
            out = better(out, make_pair_best(pts, p.id, perm.order[rank]));
      }
    }
    return out;
  };

  // Merge a regular step's candidate into the running best (equal-distance
  // pairs may still improve the ids) without touching r.
  auto absorb_regular = [&](std::size_t k) { best = better(best, cand[k]); };

  auto prepare = [&](std::size_t j, std::size_t hi) {
    if (!grid_ready || done_zero) return;
    for (; inserted_upto < j; ++inserted_upto) {
      absorb_regular(inserted_upto);
      grid.insert(pts[perm.order[inserted_upto]]);
    }
    cohort.clear();
    for (std::size_t k = j; k < hi; ++k) {
      const auto& p = pts[perm.order[k]];
      cohort[PairGrid::cell_key(p.x, p.y, grid.r)].push_back(static_cast<std::uint32_t>(k));
    }
  };

  auto check = [&](std::size_t k) {
    if (done_zero) return false;
    if (k == 1) {
      cand[1] = make_pair_best(pts, perm.order[0], perm.order[1]);
      return true;
    }
    const auto& p = pts[perm.order[k]];
    cand[k] = better(scan_grid(grid, pts, p),
                     scan_cohort(p, static_cast<std::uint32_t>(k)));
    return cand[k].d2 < best.d2;
  };

  auto special = [&](std::size_t k) {
    if (k == 0 || done_zero) return;
    if (k >= 2) res.rebuilds += 1;
    best = cand[k];
    if (best.d2 == 0.0) {
      done_zero = true;
      return;
    }
    std::vector<std::uint32_t> members(perm.order.begin(), perm.order.begin() + k + 1);
    grid = grid_rebuild(pts, members, std::sqrt(best.d2));
    grid_ready = true;
    inserted_upto = k + 1;
  };

  res.trace = exec::run_type2(pool, n, check, [](std::size_t) {}, special, prepare);

  if (!done_zero)
    for (; inserted_upto < n; ++inserted_upto) absorb_regular(inserted_upto);

  res.a = best.a;
  res.b = best.b;
  res.dist = std::sqrt(best.d2);
  return res;
}

}  // namespace incpar::closestpair2d
