#include "incpar/lp2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace incpar::lp2d {

namespace {

constexpr double kBigBound = 1e9;
constexpr std::uint32_t kNoId = 0xFFFFFFFFu;

struct Bound {
  double t;
  std::uint32_t id;
};

// max over lower bounds / min over upper bounds, ties to the lower id;
// exact double comparisons make the fold order-independent.
Bound tighter_lo(Bound a, Bound b) {
  if (b.t > a.t) return b;
  if (b.t == a.t && b.id < a.id) return b;
  return a;
}
Bound tighter_hi(Bound a, Bound b) {
  if (b.t < a.t) return b;
  if (b.t == a.t && b.id < a.id) return b;
  return a;
}

struct FoldState {
  Bound lo{-std::numeric_limits<double>::infinity(), kNoId};
  Bound hi{std::numeric_limits<double>::infinity(), kNoId};
  bool infeasible = false;
};

FoldState fold_combine(FoldState a, const FoldState& b) {
  a.lo = tighter_lo(a.lo, b.lo);
  a.hi = tighter_hi(a.hi, b.hi);
  a.infeasible = a.infeasible || b.infeasible;
  return a;
}

struct LineParam {
  double p0x, p0y;  // closest point to the origin on the line
  double ux, uy;    // direction
};

LineParam parameterize(const Halfplane& line) {
  const double n2 = line.a * line.a + line.b * line.b;
  return LineParam{line.a * line.c / n2, line.b * line.c / n2, -line.b, line.a};
}

FoldState scan_constraints(const LineParam& lp, std::span<const Halfplane> constraints,
                           std::size_t lo, std::size_t hi) {
  FoldState st;
  for (std::size_t i = lo; i < hi; ++i) {
    const Halfplane& h = constraints[i];
    const double coef = h.a * lp.ux + h.b * lp.uy;
    const double rhs = h.c - (h.a * lp.p0x + h.b * lp.p0y);
    const auto id = static_cast<std::uint32_t>(i);
    if (coef > 0.0) {
      st.hi = tighter_hi(st.hi, Bound{rhs / coef, id});
    } else if (coef < 0.0) {
      st.lo = tighter_lo(st.lo, Bound{rhs / coef, id});
    } else if (rhs < 0.0) {
      st.infeasible = true;  // parallel and violated everywhere
    }
  }
  return st;
}

std::pair<double, double> intersect_lines(const Halfplane& h1, const Halfplane& h2) {
  const double det = h1.a * h2.b - h2.a * h1.b;
  return {(h1.c * h2.b - h2.c * h1.b) / det, (h1.a * h2.c - h2.a * h1.c) / det};
}

Lp1dResult finish_1d(const Halfplane& line, std::span<const Halfplane> earlier,
                     std::pair<double, double> objective, const FoldState& st,
                     const LineParam& lp) {
  Lp1dResult out;
  if (st.infeasible || st.lo.t > st.hi.t) return out;
  const double along = objective.first * lp.ux + objective.second * lp.uy;
  const Bound chosen = along < 0.0 ? st.lo : st.hi;  // ties go to the hi side
  if (chosen.id == kNoId) {
    out.status = Lp1dResult::Status::Unbounded;
    return out;
  }
  out.status = Lp1dResult::Status::Feasible;
  out.binding = chosen.id;
  const auto [x, y] = intersect_lines(line, earlier[chosen.id]);
  out.x = x;
  out.y = y;
  return out;
}

// Seidel state shared by the sequential loop and the Type 2 driver.  The
// step list is [bound0, bound1] followed by the user constraints in
// permutation order.
class Engine {
 public:
  Engine(std::span<const Halfplane> constraints, std::pair<double, double> objective,
         const order::Permutation& perm)
      : objective_(objective) {
    if (objective.first == 0.0 && objective.second == 0.0)
      throw std::invalid_argument("lp2d: zero objective");
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (constraints[i].a == 0.0 && constraints[i].b == 0.0)
        throw std::invalid_argument("lp2d: degenerate constraint " + std::to_string(i));
    if (perm.size() != constraints.size())
      throw std::invalid_argument("lp2d: permutation size mismatch");
    const double px = -objective.second, py = objective.first;
    steps_.reserve(constraints.size() + 2);
    steps_.push_back(Halfplane{objective.first + px, objective.second + py, kBigBound});
    steps_.push_back(Halfplane{objective.first - px, objective.second - py, kBigBound});
    for (std::uint32_t r = 0; r < perm.size(); ++r)
      steps_.push_back(constraints[perm.order[r]]);
    perm_ = &perm;
  }

  std::size_t step_count() const { return steps_.size(); }

  bool check_special(std::size_t k) const {
    if (infeasible_) return false;
    if (k == 1) return true;
    const Halfplane& h = steps_[k];
    return h.a * x_ + h.b * y_ > h.c;
  }

  // fold(line_param, lo, hi) -> FoldState over steps_[lo, hi)
  template <class FoldFn>
  void run_special(std::size_t k, FoldFn&& fold) {
    if (k == 0 || infeasible_) return;
    if (k == 1) {
      const auto [x, y] = intersect_lines(steps_[0], steps_[1]);
      x_ = x;
      y_ = y;
      tight_ = {0, 1};
      return;
    }
    specials_ += 1;
    const LineParam lp = parameterize(steps_[k]);
    const FoldState st = fold(lp, std::size_t{0}, k);
    if (st.infeasible || st.lo.t > st.hi.t) {
      infeasible_ = true;
      return;
    }
    const double along = objective_.first * lp.ux + objective_.second * lp.uy;
    const Bound chosen = along < 0.0 ? st.lo : st.hi;
    // The two artificial bounds cut every line on the objective side, so a
    // special step always has a finite optimal endpoint.
    if (chosen.id == kNoId)
      throw std::logic_error("lp2d: unbounded 1D subproblem despite bounding constraints");
    const auto [x, y] = intersect_lines(steps_[k], steps_[chosen.id]);
    x_ = x;
    y_ = y;
    tight_ = {static_cast<std::uint32_t>(k), chosen.id};
  }

  FoldState serial_fold(const LineParam& lp, std::size_t lo, std::size_t hi) const {
    return scan_constraints(lp, steps_, lo, hi);
  }

  LpResult result() const {
    LpResult out;
    out.special_steps = specials_;
    if (infeasible_) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    out.x = x_;
    out.y = y_;
    bool artificial = false;
    for (const std::uint32_t s : tight_) {
      if (s < 2)
        artificial = true;
      else
        out.tight.push_back(perm_->order[s - 2]);
    }
    std::sort(out.tight.begin(), out.tight.end());
    out.status = artificial ? LpStatus::UnboundedRejected : LpStatus::Optimal;
    return out;
  }

  const std::vector<Halfplane>& steps() const { return steps_; }

 private:
  std::vector<Halfplane> steps_;
  const order::Permutation* perm_ = nullptr;
  std::pair<double, double> objective_;
  double x_ = 0.0, y_ = 0.0;
  std::array<std::uint32_t, 2> tight_{kNoId, kNoId};
  bool infeasible_ = false;
  std::uint64_t specials_ = 0;
};

}  // namespace

Lp1dResult lp_1d(const Halfplane& line, std::span<const Halfplane> earlier,
                 std::pair<double, double> objective) {
  if (line.a == 0.0 && line.b == 0.0)
    throw std::invalid_argument("lp_1d: degenerate line");
  const LineParam lp = parameterize(line);
  const FoldState st = scan_constraints(lp, earlier, 0, earlier.size());
  return finish_1d(line, earlier, objective, st, lp);
}

LpResult lp_seq(std::span<const Halfplane> constraints, std::pair<double, double> objective,
                const order::Permutation& perm) {
  Engine eng(constraints, objective, perm);
  auto fold = [&](const LineParam& lp, std::size_t lo, std::size_t hi) {
    return eng.serial_fold(lp, lo, hi);
  };
  eng.run_special(0, fold);
  eng.run_special(1, fold);
  for (std::size_t k = 2; k < eng.step_count(); ++k)
    if (eng.check_special(k)) eng.run_special(k, fold);
  return eng.result();
}

LpResult lp_par(std::span<const Halfplane> constraints, std::pair<double, double> objective,
                const order::Permutation& perm, exec::ThreadPool& pool) {
  Engine eng(constraints, objective, perm);
  auto fold = [&](const LineParam& lp, std::size_t lo, std::size_t hi) {
    return exec::blocked_reduce(
        pool, lo, hi, 2048, FoldState{},
        [&](std::size_t blo, std::size_t bhi) { return eng.serial_fold(lp, blo, bhi); },
        fold_combine);
  };
  const auto trace = exec::run_type2(
      pool, eng.step_count(),
      [&](std::size_t k) { return eng.check_special(k); },
      [](std::size_t) {},  // a satisfied constraint leaves the optimum alone
      [&](std::size_t k) { eng.run_special(k, fold); });
  LpResult out = eng.result();
  out.trace = trace;
  return out;
}

}  // namespace incpar::lp2d
