#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "incpar/exec.hpp"
#include "incpar/order.hpp"

namespace incpar::lp2d {

// Constraint a*x + b*y <= c with (a, b) != (0, 0).
struct Halfplane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

enum class LpStatus { Optimal, Infeasible, UnboundedRejected };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double x = 0.0;
  double y = 0.0;
  std::vector<std::uint32_t> tight;     // input constraint ids defining the optimum
  std::uint64_t special_steps = 0;      // steps whose constraint violated the running optimum
  exec::RoundTrace trace;               // parallel mode only
};

struct Lp1dResult {
  enum class Status { Feasible, Infeasible, Unbounded } status = Status::Infeasible;
  double x = 0.0;
  double y = 0.0;
  // Index into `earlier` of the constraint providing the optimal endpoint.
  std::int64_t binding = -1;
};

// One-dimensional LP on the boundary line of `line`: each earlier
// constraint cuts a half-interval out of the line's parameterization;
// returns the objective-optimal endpoint of the intersection.  Ties between
// equally tight constraints go to the lower index.
Lp1dResult lp_1d(const Halfplane& line, std::span<const Halfplane> earlier,
                 std::pair<double, double> objective);

// Maximizes objective . (x, y) over the intersection of the halfplanes,
// inserting them in permutation order.  Two artificial constraints
// (o +/- perp(o)) . (x, y) <= 1e9 run as the first two steps so the problem
// is bounded; when the final optimum leans on one of them the true LP was
// unbounded and the status says so.  Throws std::invalid_argument on a
// degenerate constraint or a zero objective.
LpResult lp_seq(std::span<const Halfplane> constraints, std::pair<double, double> objective,
                const order::Permutation& perm);

// Prefix-doubled parallel version; bitwise-identical LpResult to lp_seq
// because the 1D solves reduce (value, id) pairs with exact min/max
// semantics, which are order-independent.
LpResult lp_par(std::span<const Halfplane> constraints, std::pair<double, double> objective,
                const order::Permutation& perm, exec::ThreadPool& pool);

}  // namespace incpar::lp2d
