#include "incpar/delaunay2d.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace incpar::delaunay2d {

namespace {

using geomkit::Point2D;

void check_duplicates(std::span<const Point2D> points) {
  std::vector<std::uint32_t> idx(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (points[idx[i - 1]].x == points[idx[i]].x && points[idx[i - 1]].y == points[idx[i]].y)
      throw std::invalid_argument("delaunay2d: duplicate points " + std::to_string(idx[i - 1]) +
                                  " and " + std::to_string(idx[i]));
}

Triangulation make_base(std::span<const Point2D> points) {
  check_duplicates(points);
  Triangulation T;
  T.n = static_cast<std::uint32_t>(points.size());
  T.pts.assign(points.begin(), points.end());
  for (std::uint32_t i = 0; i < T.n; ++i) T.pts[i].id = i;

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (!points.empty()) {
    xmin = xmax = points[0].x;
    ymin = ymax = points[0].y;
    for (const auto& p : points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  const double diam = std::hypot(xmax - xmin, ymax - ymin);
  const double radius = 100.0 * std::max(diam, 1.0);
  const double s3h = std::sqrt(3.0) / 2.0;
  T.pts.push_back(Point2D{cx, cy + radius, T.n});
  T.pts.push_back(Point2D{cx - radius * s3h, cy - 0.5 * radius, T.n + 1});
  T.pts.push_back(Point2D{cx + radius * s3h, cy - 0.5 * radius, T.n + 2});

  Triangle tb;
  tb.corners = {T.n, T.n + 1, T.n + 2};  // ccw by construction
  tb.conflicts.resize(T.n);
  for (std::uint32_t r = 0; r < T.n; ++r) tb.conflicts[r] = r;
  T.tris.push_back(std::move(tb));
  T.alive.push_back(1);
  for (int e = 0; e < 3; ++e) {
    const auto a = T.tris[0].corners[e], b = T.tris[0].corners[(e + 1) % 3];
    T.face_map[face_key(a, b)] = FaceSlots{0, -1};
  }
  return T;
}

void attach(Triangulation& T, std::uint64_t fk, std::int32_t tri) {
  FaceSlots& s = T.face_map[fk];
  if (s.t0 < 0)
    s.t0 = tri;
  else if (s.t1 < 0)
    s.t1 = tri;
  else
    throw std::logic_error("delaunay2d: face already has two triangles");
}

void replace(Triangulation& T, std::uint64_t fk, std::int32_t old_tri, std::int32_t new_tri) {
  FaceSlots& s = T.face_map.at(fk);
  if (s.t0 == old_tri)
    s.t0 = new_tri;
  else if (s.t1 == old_tri)
    s.t1 = new_tri;
  else
    throw std::logic_error("delaunay2d: detach of unattached triangle");
}

std::array<std::uint32_t, 3> ccw_corners(const Triangulation& T, std::uint32_t fa,
                                         std::uint32_t fb, std::uint32_t v_id) {
  const int o = geomkit::orient2d(T.pts[fa], T.pts[fb], T.pts[v_id]);
  if (o == 0) throw std::logic_error("delaunay2d: tent point collinear with face");
  if (o > 0) return {fa, fb, v_id};
  return {fb, fa, v_id};
}

// Conflict filter of ReplaceBoundary: candidates are the merged conflict
// sets of the consumed triangles minus the inserted rank; members of both
// sets skip the incircle test (they always carry over).
struct NewTriangle {
  std::array<std::uint32_t, 3> corners{};
  std::vector<std::uint32_t> conflicts;
  std::uint64_t tests = 0;
};

NewTriangle build_replacement(const Triangulation& T, const order::Permutation& perm,
                              std::int32_t t_idx, std::int32_t nb_idx, std::uint32_t fa,
                              std::uint32_t fb, std::uint32_t v_rank) {
  NewTriangle out;
  const std::uint32_t v_id = perm.order[v_rank];
  out.corners = ccw_corners(T, fa, fb, v_id);
  const Point2D& pa = T.pts[out.corners[0]];
  const Point2D& pb = T.pts[out.corners[1]];
  const Point2D& pc = T.pts[out.corners[2]];

  static const std::vector<std::uint32_t> kEmpty;
  const auto& A = T.tris[t_idx].conflicts;
  const auto& B = nb_idx >= 0 ? T.tris[nb_idx].conflicts : kEmpty;
  std::size_t i = 0, j = 0;
  auto consider = [&](std::uint32_t rank, bool in_both) {
    if (rank == v_rank) return;
    if (in_both) {
      out.conflicts.push_back(rank);
      return;
    }
    out.tests += 1;
    if (geomkit::encroaches(pa, pb, pc, T.pts[perm.order[rank]]))
      out.conflicts.push_back(rank);
  };
  while (i < A.size() && j < B.size()) {
    if (A[i] == B[j]) {
      consider(A[i], true);
      ++i;
      ++j;
    } else if (A[i] < B[j]) {
      consider(A[i], false);
      ++i;
    } else {
      consider(B[j], false);
      ++j;
    }
  }
  for (; i < A.size(); ++i) consider(A[i], false);
  for (; j < B.size(); ++j) consider(B[j], false);
  return out;
}

std::int32_t other_slot(const FaceSlots& s, std::int32_t t) {
  if (s.t0 == t) return s.t1;
  if (s.t1 == t) return s.t0;
  throw std::logic_error("delaunay2d: triangle not attached to its face");
}

}  // namespace

DtResult triangulate_seq(std::span<const Point2D> points, const order::Permutation& perm,
                         dagmeter::IterationDag* meter) {
  if (perm.size() != points.size())
    throw std::invalid_argument("delaunay2d: permutation size mismatch");
  DtResult res;
  Triangulation& T = res.tri;
  T = make_base(points);
  if (meter) meter->add_node(-1);  // bounding triangle

  // rank -> triangles whose conflict set contains it (lazily pruned)
  std::vector<std::vector<std::int32_t>> point_tris(T.n);
  for (std::uint32_t r = 0; r < T.n; ++r) point_tris[r].push_back(0);

  std::vector<std::int32_t> cavity;
  for (std::uint32_t step = 0; step < T.n; ++step) {
    const std::uint32_t v_id = perm.order[step];
    cavity.clear();
    for (const std::int32_t t : point_tris[step])
      if (T.alive[t]) cavity.push_back(t);
    if (cavity.empty())
      throw std::logic_error("delaunay2d: point encroaches nothing (duplicate?)");

    for (const std::int32_t t : cavity) {
      const auto corners = T.tris[t].corners;
      for (int e = 0; e < 3; ++e) {
        const std::uint32_t fa = corners[e], fb = corners[(e + 1) % 3];
        const std::uint64_t fk = face_key(fa, fb);
        const std::int32_t nb = other_slot(T.face_map.at(fk), t);
        if (nb >= 0) {
          if (!T.alive[nb]) throw std::logic_error("delaunay2d: dead neighbor");
          const auto& bc = T.tris[nb].conflicts;
          if (std::binary_search(bc.begin(), bc.end(), step)) continue;  // cavity-interior face
        } else if (!(T.is_bounding(fa) && T.is_bounding(fb))) {
          throw std::logic_error("delaunay2d: single-sided interior face");
        }

        NewTriangle nt = build_replacement(T, perm, t, nb, fa, fb, step);
        res.incircle_count += nt.tests;
        const auto new_idx = static_cast<std::int32_t>(T.tris.size());
        Triangle rec;
        rec.corners = nt.corners;
        rec.conflicts = std::move(nt.conflicts);
        rec.creator_rank = step;
        for (const std::uint32_t r : rec.conflicts) point_tris[r].push_back(new_idx);
        T.tris.push_back(std::move(rec));
        T.alive.push_back(1);
        if (meter) {
          const std::uint32_t node = meter->add_node(static_cast<std::int64_t>(v_id));
          meter->record_arc(static_cast<std::uint32_t>(t), node);
          if (nb >= 0) meter->record_arc(static_cast<std::uint32_t>(nb), node);
        }
        replace(T, fk, t, new_idx);
        attach(T, face_key(fa, v_id), new_idx);
        attach(T, face_key(fb, v_id), new_idx);
      }
    }
    for (const std::int32_t t : cavity) T.alive[t] = 0;
  }
  return res;
}

DtResult triangulate_par(std::span<const Point2D> points, const order::Permutation& perm,
                         exec::ThreadPool& pool) {
  if (perm.size() != points.size())
    throw std::invalid_argument("delaunay2d: permutation size mismatch");
  DtResult res;
  Triangulation& T = res.tri;
  T = make_base(points);

  struct ActiveFace {
    std::uint64_t fkey;
    std::int32_t t;   // side that fires (smaller min conflict)
    std::int32_t nb;  // other side, -1 on the bounding hull
  };

  auto evaluate = [&](std::uint64_t fkey) -> std::optional<ActiveFace> {
    const FaceSlots& s = T.face_map.at(fkey);
    const auto a = static_cast<std::uint32_t>(fkey >> 32);
    const auto b = static_cast<std::uint32_t>(fkey & 0xFFFFFFFFu);
    if (T.is_bounding(a) && T.is_bounding(b)) {
      if (s.t0 < 0 || s.t1 >= 0) throw std::logic_error("delaunay2d: malformed hull face");
      if (T.tris[s.t0].conflicts.empty()) return std::nullopt;
      return ActiveFace{fkey, s.t0, -1};
    }
    if (s.t0 < 0 || s.t1 < 0) return std::nullopt;  // waiting for its second triangle
    const std::uint32_t m0 = T.tris[s.t0].min_conflict();
    const std::uint32_t m1 = T.tris[s.t1].min_conflict();
    if (m0 == m1) return std::nullopt;  // both done, or a cavity-interior pair
    if (m0 < m1) return ActiveFace{fkey, s.t0, s.t1};
    return ActiveFace{fkey, s.t1, s.t0};
  };

  std::vector<ActiveFace> active;
  {
    std::vector<std::uint64_t> initial;
    for (int e = 0; e < 3; ++e) {
      const auto& c = T.tris[0].corners;
      initial.push_back(face_key(c[e], c[(e + 1) % 3]));
    }
    std::sort(initial.begin(), initial.end());
    for (const auto fk : initial)
      if (auto af = evaluate(fk)) active.push_back(*af);
  }

  std::vector<NewTriangle> jobs;
  std::vector<std::uint64_t> touched;
  while (!active.empty()) {
    res.rounds += 1;
    jobs.assign(active.size(), NewTriangle{});

    // Heavy phase: conflict merges and incircle filtering, one job per
    // fired face, all reads against the round-start structure.
    pool.parallel_for(0, active.size(), 1, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t f = lo; f < hi; ++f) {
        const ActiveFace& af = active[f];
        const auto a = static_cast<std::uint32_t>(af.fkey >> 32);
        const auto b = static_cast<std::uint32_t>(af.fkey & 0xFFFFFFFFu);
        jobs[f] = build_replacement(T, perm, af.t, af.nb, a, b, T.tris[af.t].min_conflict());
      }
    });

    // Barrier apply: triangle ids and face updates in active-list order.
    touched.clear();
    for (std::size_t f = 0; f < active.size(); ++f) {
      const ActiveFace& af = active[f];
      res.incircle_count += jobs[f].tests;
      const std::uint32_t v_rank = T.tris[af.t].min_conflict();
      const std::uint32_t v_id = perm.order[v_rank];
      const auto a = static_cast<std::uint32_t>(af.fkey >> 32);
      const auto b = static_cast<std::uint32_t>(af.fkey & 0xFFFFFFFFu);
      const auto new_idx = static_cast<std::int32_t>(T.tris.size());
      Triangle rec;
      rec.corners = jobs[f].corners;
      rec.conflicts = std::move(jobs[f].conflicts);
      rec.creator_rank = v_rank;
      T.tris.push_back(std::move(rec));
      replace(T, af.fkey, af.t, new_idx);
      attach(T, face_key(a, v_id), new_idx);
      attach(T, face_key(b, v_id), new_idx);
      touched.push_back(af.fkey);
      touched.push_back(face_key(a, v_id));
      touched.push_back(face_key(b, v_id));
    }

    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    active.clear();
    for (const auto fk : touched)
      if (auto af = evaluate(fk)) active.push_back(*af);
  }

  T.alive.resize(T.tris.size());
  for (std::size_t t = 0; t < T.tris.size(); ++t)
    T.alive[t] = T.tris[t].conflicts.empty() ? 1 : 0;
  return res;
}

std::pair<bool, std::vector<Violation>> validate_delaunay(const DtResult& result,
                                                          std::span<const Point2D> points) {
  const Triangulation& T = result.tri;
  std::vector<Violation> bad;
  for (const auto& corners : interior_triangles(T)) {
    const Point2D& a = T.pts[corners[0]];
    const Point2D& b = T.pts[corners[1]];
    const Point2D& c = T.pts[corners[2]];
    for (std::uint32_t p = 0; p < points.size(); ++p) {
      if (p == corners[0] || p == corners[1] || p == corners[2]) continue;
      if (geomkit::incircle(a, b, c, T.pts[p]) > 0) bad.push_back(Violation{corners, p});
    }
  }
  return {bad.empty(), std::move(bad)};
}

std::vector<std::array<std::uint32_t, 3>> interior_triangles(const Triangulation& tri) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (const auto& t : tri.tris) {
    if (!t.conflicts.empty()) continue;
    if (tri.is_bounding(t.corners[0]) || tri.is_bounding(t.corners[1]) ||
        tri.is_bounding(t.corners[2]))
      continue;
    auto c = t.corners;
    const int lead = c[0] < c[1] ? (c[0] < c[2] ? 0 : 2) : (c[1] < c[2] ? 1 : 2);
    out.push_back({c[lead], c[(lead + 1) % 3], c[(lead + 2) % 3]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace incpar::delaunay2d
