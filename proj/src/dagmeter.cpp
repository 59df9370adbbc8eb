#include "incpar/dagmeter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace incpar::dagmeter {

std::uint32_t IterationDag::add_node(std::int64_t label) {
  labels_.push_back(label);
  succ_.emplace_back();
  return static_cast<std::uint32_t>(labels_.size() - 1);
}

void IterationDag::record_arc(std::uint32_t from, std::uint32_t to) {
  if (from >= labels_.size() || to >= labels_.size())
    throw std::invalid_argument("record_arc: unregistered node id");
  if (from >= to)
    throw std::invalid_argument("record_arc: arc must go from an earlier-created node to a later one");
  succ_[from].push_back(to);
  deduped_ = false;
}

void IterationDag::dedup() const {
  if (deduped_) return;
  for (auto& s : succ_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  deduped_ = true;
}

std::size_t IterationDag::arc_count() const {
  dedup();
  std::size_t total = 0;
  for (const auto& s : succ_) total += s.size();
  return total;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> IterationDag::arcs() const {
  dedup();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(arc_count());
  for (std::uint32_t u = 0; u < succ_.size(); ++u)
    for (std::uint32_t v : succ_[u]) out.emplace_back(u, v);
  return out;
}

std::uint32_t IterationDag::longest_path() const {
  // Creation order is topological: arcs only go forward, so a single pass
  // over node ids finalizes each node before it is read.
  std::vector<std::uint32_t> dp(labels_.size(), 0);
  std::uint32_t best = 0;
  for (std::uint32_t u = 0; u < succ_.size(); ++u) {
    for (std::uint32_t v : succ_[u]) dp[v] = std::max(dp[v], dp[u] + 1);
    best = std::max(best, dp[u]);
  }
  return best;
}

double harmonic(std::uint64_t n) {
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double term = 1.0 / static_cast<double>(i);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

DepthStats make_depth_stats(std::uint32_t depth, std::uint64_t n) {
  DepthStats s;
  s.depth = depth;
  s.n = n;
  s.harmonic_n = harmonic(n);
  s.ratio_to_ln_n = n >= 2 ? static_cast<double>(depth) / std::log(static_cast<double>(n)) : 0.0;
  return s;
}

DepthStats longest_path_stats(const IterationDag& dag, std::uint64_t n) {
  return make_depth_stats(dag.longest_path(), n);
}

DepthSummary aggregate(const std::vector<DepthStats>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate: empty run list");
  for (const auto& r : runs)
    if (r.n != runs.front().n)
      throw std::invalid_argument("aggregate: runs must share the same n");
  DepthSummary out;
  double sum = 0.0, comp = 0.0;
  for (const auto& r : runs) {
    const double y = static_cast<double>(r.depth) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    out.max_depth = std::max(out.max_depth, r.depth);
    out.max_ratio_to_ln_n = std::max(out.max_ratio_to_ln_n, r.ratio_to_ln_n);
  }
  out.mean_depth = sum / static_cast<double>(runs.size());
  return out;
}

}  // namespace incpar::dagmeter
