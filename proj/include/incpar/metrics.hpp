#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace incpar::metrics {

// One record per run; serialized as a single JSON line.  Every field except
// wall_ms is deterministic given the inputs.  The counters present are
// exactly the ones meaningful for the algorithm:
//   sort: height | delaunay: incircle_count | lp: special_steps
//   closest-pair: rebuilds | seb: update1_calls, update2_calls
//   le-lists: visits | scc: visits, components
struct MetricsReport {
  std::string algo;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::string mode;  // "seq" or "par"
  unsigned threads = 1;
  std::uint32_t rounds = 0;
  std::optional<std::uint32_t> depth;  // metered dependence depth, when requested
  std::map<std::string, std::uint64_t> counters;
  double wall_ms = 0.0;
  std::optional<bool> validated;  // present only when validation ran

  std::string to_json() const;
};

}  // namespace incpar::metrics
