#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace incpar::graphcore {

// Directed graph in CSR form, forward and reverse.  The reverse adjacency
// is always materialized: SCC needs backward reachability and paying the
// transpose once at construction keeps both consumers simple.  Immutable
// after construction; safe to share across threads.
struct Graph {
  std::uint32_t n = 0;
  bool weighted = false;
  std::vector<std::size_t> out_off, in_off;  // n + 1 entries each
  std::vector<std::uint32_t> out_to, in_to;
  std::vector<double> out_w, in_w;  // empty when unweighted

  std::uint64_t m() const { return out_to.size(); }
};

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double w = 1.0;
};

// Throws std::invalid_argument on out-of-range endpoints or negative
// weights.  Self-loops and parallel edges are allowed.
Graph from_edges(std::uint32_t n, const std::vector<Edge>& edges, bool weighted);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Format: first line "n m" or "n m weighted"; then m lines "u v" or
// "u v w" with 0-based vertex ids.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// m directed edges with both endpoints drawn uniformly (with replacement)
// from Rng(seed); weights uniform in (0, 1] when weighted.  Per edge the
// draw order is: u, v, then the weight.
Graph gen_random_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed, bool weighted);

constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Binary-heap Dijkstra (weighted) or BFS level numbering (unweighted);
// unreached vertices get +infinity.
std::vector<double> oracle_sssp(const Graph& g, std::uint32_t source);

// Tarjan's algorithm (iterative); labels are component ids numbered in
// completion order.
std::vector<std::uint32_t> oracle_scc(const Graph& g);

}  // namespace incpar::graphcore
