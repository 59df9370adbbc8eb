#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "incpar/metrics.hpp"

namespace incpar::cli {

// One algorithm execution, fully described.  Inputs come from a file when a
// path is set, otherwise they are generated from the seed (documented in
// the dataset generators).  The permutation seed is derived from --seed so
// the insertion order and the data are independent streams.
struct RunSpec {
  std::string algo;  // sort | delaunay | lp | closest-pair | seb | le-lists | scc
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 1;
  std::string mode = "seq";
  unsigned threads = 0;  // 0 = INCPAR_THREADS or hardware
  bool validate = false;
  bool meter_depth = false;
  bool weighted = false;
  std::string points_path, keys_path, constraints_path, graph_path;
  std::pair<double, double> objective{1.0, 0.0};
};

struct RunOutcome {
  metrics::MetricsReport report;
  std::string text;  // canonical algorithm output
  bool validation_ok = true;
};

// Throws on bad inputs; validation failures are reported, not thrown.
RunOutcome run_algorithm(const RunSpec& spec);

struct BenchRow {
  metrics::MetricsReport report;
  std::string status;  // "ok" or the failure message
};

// One run per (n, seed, mode), rows in that loop order; a failing child run
// flags its row and the sweep continues.
std::vector<BenchRow> bench_sweep(const RunSpec& base, const std::vector<std::uint64_t>& sizes,
                                  const std::vector<std::uint64_t>& seeds,
                                  const std::vector<std::string>& modes);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Full command-line entry point: returns 0 on success, 1 on validation
// failure, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incpar::cli
