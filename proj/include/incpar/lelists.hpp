#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "incpar/exec.hpp"
#include "incpar/graphcore.hpp"
#include "incpar/order.hpp"

namespace incpar::lelists {

struct LeEntry {
  std::uint32_t source = 0;  // vertex id of the inserted vertex
  double dist = 0.0;

  bool operator==(const LeEntry&) const = default;
};

struct LeListsResult {
  std::vector<std::vector<LeEntry>> lists;
  std::uint64_t visits = 0;  // total (source, target) pairs emitted by searches
  exec::RoundTrace trace;    // parallel mode only
};

// Pruned search from `source`: returns exactly the pairs (u, d) with
// d = d(source, u) < delta[u], in settle order.  Dijkstra for weighted
// graphs, BFS for unweighted; the tentative-distance initialization is
// replaced by the delta values carried over from earlier steps, so the
// search never relaxes out of a vertex it cannot improve.
std::vector<std::pair<std::uint32_t, double>> pruned_sssp(
    const graphcore::Graph& g, std::uint32_t source, const std::vector<double>& delta);

// Searches run along out-edges from each inserted vertex, so L(u) collects
// the inserted sources v with d(v, u) smaller than every earlier source's
// distance, in insertion order with strictly decreasing distances.
LeListsResult le_lists_seq(const graphcore::Graph& g, const order::Permutation& perm);

// Doubling rounds: each step searches against the round-start delta
// snapshot; the combine groups emitted triples by target, orders each group
// by source rank, keeps the strictly-decreasing distance prefix minima and
// writes the group minimum back into delta.  Lists equal le_lists_seq
// exactly for any thread count.
LeListsResult le_lists_par(const graphcore::Graph& g, const order::Permutation& perm,
                           exec::ThreadPool& pool);

}  // namespace incpar::lelists
