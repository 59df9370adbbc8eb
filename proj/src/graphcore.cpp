#include "incpar/graphcore.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "incpar/order.hpp"

namespace incpar::graphcore {

Graph from_edges(std::uint32_t n, const std::vector<Edge>& edges, bool weighted) {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("from_edges: vertex id out of range");
    if (weighted && (!(e.w >= 0.0) || !std::isfinite(e.w)))
      throw std::invalid_argument("from_edges: weights must be finite and non-negative");
  }
  Graph g;
  g.n = n;
  g.weighted = weighted;
  g.out_off.assign(n + 1, 0);
  g.in_off.assign(n + 1, 0);
  for (const auto& e : edges) {
    g.out_off[e.u + 1] += 1;
    g.in_off[e.v + 1] += 1;
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    g.out_off[v + 1] += g.out_off[v];
    g.in_off[v + 1] += g.in_off[v];
  }
  g.out_to.resize(edges.size());
  g.in_to.resize(edges.size());
  if (weighted) {
    g.out_w.resize(edges.size());
    g.in_w.resize(edges.size());
  }
  std::vector<std::size_t> ocur(g.out_off.begin(), g.out_off.end() - 1);
  std::vector<std::size_t> icur(g.in_off.begin(), g.in_off.end() - 1);
  for (const auto& e : edges) {
    const std::size_t oi = ocur[e.u]++;
    const std::size_t ii = icur[e.v]++;
    g.out_to[oi] = e.v;
    g.in_to[ii] = e.u;
    if (weighted) {
      g.out_w[oi] = e.w;
      g.in_w[ii] = e.w;
    }
  }
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::istringstream& ls) {
    while (std::getline(in, line)) {
      ++lineno;
      ls.clear();
      ls.str(line);
      std::string probe;
      std::istringstream check(line);
      if (check >> probe) return true;  // skip blank lines
    }
    return false;
  };

  std::istringstream ls;
  if (!next_line(ls)) throw ParseError(0, "empty input");
  std::int64_t n = -1, m = -1;
  std::string flag;
  if (!(ls >> n >> m) || n < 0 || m < 0)
    throw ParseError(lineno, "expected header 'n m [weighted]'");
  bool weighted = false;
  if (ls >> flag) {
    if (flag != "weighted") throw ParseError(lineno, "unknown header flag '" + flag + "'");
    weighted = true;
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens in header");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!next_line(ls)) throw ParseError(lineno, "expected " + std::to_string(m) + " edges");
    std::int64_t u = -1, v = -1;
    double w = 1.0;
    if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex id out of range");
    if (weighted) {
      if (!(ls >> w)) throw ParseError(lineno, "missing weight");
      if (!(w >= 0.0) || !std::isfinite(w)) throw ParseError(lineno, "negative or non-finite weight");
    }
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens");
    edges.push_back(Edge{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), w});
  }
  return from_edges(static_cast<std::uint32_t>(n), edges, weighted);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.m();
  if (g.weighted) out << " weighted";
  out << '\n';
  out.precision(17);
  for (std::uint32_t u = 0; u < g.n; ++u) {
    for (std::size_t e = g.out_off[u]; e < g.out_off[u + 1]; ++e) {
      out << u << ' ' << g.out_to[e];
      if (g.weighted) out << ' ' << g.out_w[e];
      out << '\n';
    }
  }
  return out.str();
}

Graph gen_random_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed, bool weighted) {
  order::Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    Edge e;
    e.u = static_cast<std::uint32_t>(rng.bounded(n));
    e.v = static_cast<std::uint32_t>(rng.bounded(n));
    e.w = weighted ? rng.unit_positive() : 1.0;
    edges.push_back(e);
  }
  return from_edges(n, edges, weighted);
}

std::vector<double> oracle_sssp(const Graph& g, std::uint32_t source) {
  std::vector<double> dist(g.n, kUnreachable);
  if (source >= g.n) throw std::invalid_argument("oracle_sssp: source out of range");
  dist[source] = 0.0;
  if (!g.weighted) {
    std::queue<std::uint32_t> q;
    q.push(source);
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop();
      for (std::size_t e = g.out_off[u]; e < g.out_off[u + 1]; ++e) {
        const std::uint32_t v = g.out_to[e];
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1.0;
          q.push(v);
        }
      }
    }
    return dist;
  }
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (std::size_t e = g.out_off[u]; e < g.out_off[u + 1]; ++e) {
      const std::uint32_t v = g.out_to[e];
      const double nd = d + g.out_w[e];
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> oracle_scc(const Graph& g) {
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<std::uint32_t> index(g.n, kUnset), lowlink(g.n, 0), label(g.n, kUnset);
  std::vector<std::uint8_t> on_stack(g.n, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0, next_label = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::uint32_t root = 0; root < g.n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, g.out_off[root]});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < g.out_off[f.v + 1]) {
        const std::uint32_t w = g.out_to[f.edge++];
        if (index[w] == kUnset) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, g.out_off[w]});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        const std::uint32_t v = f.v;
        call.pop_back();
        if (!call.empty())
          lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          for (;;) {
            const std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            label[w] = next_label;
            if (w == v) break;
          }
          ++next_label;
        }
      }
    }
  }
  return label;
}

}  // namespace incpar::graphcore
