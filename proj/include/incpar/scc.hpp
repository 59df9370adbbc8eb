#pragma once

#include <cstdint>
#include <vector>

#include "incpar/exec.hpp"
#include "incpar/graphcore.hpp"
#include "incpar/order.hpp"

namespace incpar::scc {

// Partition id for vertices already assigned to a component.
constexpr std::uint32_t kDeadPart = 0xFFFFFFFFu;
constexpr std::uint32_t kUnlabeled = 0xFFFFFFFFu;

struct SccResult {
  std::vector<std::uint32_t> labels;  // component id per vertex
  std::uint32_t components = 0;
  std::uint64_t visits = 0;  // total vertices touched by reachability searches
  exec::RoundTrace trace;    // parallel mode only
};

// BFS from `source` over out-edges (forward) or in-edges (backward) that
// never leaves vertices whose part id equals the source's.  Throws
// std::invalid_argument when the source is dead.
std::vector<std::uint32_t> restricted_reach(const graphcore::Graph& g,
                                            const std::vector<std::uint32_t>& part,
                                            std::uint32_t source, bool forward);

// Incremental divide-and-conquer: at each alive pivot, both reachability
// searches inside its partition carve out one component and split the rest
// three ways.  Component ids are assigned in pivot-step order.
SccResult scc_seq(const graphcore::Graph& g, const order::Permutation& perm);

// Doubling rounds: every pivot alive at the round start runs both searches
// against the round-start partition; the combine assigns each vertex hit in
// both directions by some pivot to that pivot's component (minimum rank
// wins) and refines the surviving partitions by their per-search membership
// signatures (the eager cut).  The final partition into components equals
// scc_seq's up to label renaming.
SccResult scc_par(const graphcore::Graph& g, const order::Permutation& perm,
                  exec::ThreadPool& pool);

// True when two labelings induce the same partition of the vertices.
bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

}  // namespace incpar::scc
