#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace incpar::dagmeter {

// Append-only dependence DAG over dense node ids assigned at creation.
// Arcs must point from an earlier-created node to a later one, so creation
// order is a topological order by construction.  Recording the same arc
// twice is idempotent.
class IterationDag {
 public:
  std::uint32_t add_node(std::int64_t label = -1);

  // Throws std::invalid_argument if either id is unregistered or if
  // from >= to (creation-order violation).
  void record_arc(std::uint32_t from, std::uint32_t to);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t arc_count() const;
  std::int64_t label(std::uint32_t node) const { return labels_[node]; }

  // Deduplicated arcs, sorted by (from, to).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs() const;

  // Longest directed path measured in arcs, by DP over creation order.
  std::uint32_t longest_path() const;

 private:
  void dedup() const;

  std::vector<std::int64_t> labels_;
  mutable std::vector<std::vector<std::uint32_t>> succ_;
  mutable bool deduped_ = true;
};

struct DepthStats {
  std::uint32_t depth = 0;
  std::uint64_t n = 0;
  double harmonic_n = 0.0;
  double ratio_to_ln_n = 0.0;  // depth / ln(n) for n >= 2, else 0
};

// Compensated (Kahan) direct sum of 1/i for i = 1..n.
double harmonic(std::uint64_t n);

DepthStats make_depth_stats(std::uint32_t depth, std::uint64_t n);

// longest_path folded into DepthStats for problem size n.
DepthStats longest_path_stats(const IterationDag& dag, std::uint64_t n);

struct DepthSummary {
  double mean_depth = 0.0;
  std::uint32_t max_depth = 0;
  double max_ratio_to_ln_n = 0.0;
};

// Throws std::invalid_argument on an empty list or mismatched n.
DepthSummary aggregate(const std::vector<DepthStats>& runs);

}  // namespace incpar::dagmeter
