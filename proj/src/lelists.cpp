#include "incpar/lelists.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace incpar::lelists {

namespace {

using Visit = std::pair<std::uint32_t, double>;

std::vector<Visit> pruned_bfs(const graphcore::Graph& g, std::uint32_t source,
                              const std::vector<double>& delta) {
  std::vector<Visit> out;
  if (!(0.0 < delta[source])) return out;
  // Small local hash on touched vertices only, so a pruned search costs
  // O(|S| + out-edges of S) rather than O(n).
  std::vector<std::uint32_t> frontier{source}, next;
  std::unordered_map<std::uint32_t, double> seen;
  seen.emplace(source, 0.0);
  out.emplace_back(source, 0.0);
  double d = 0.0;
  while (!frontier.empty()) {
    d += 1.0;
    next.clear();
    for (const std::uint32_t u : frontier) {
      for (std::size_t e = g.out_off[u]; e < g.out_off[u + 1]; ++e) {
        const std::uint32_t v = g.out_to[e];
        if (d < delta[v] && seen.emplace(v, d).second) {
          next.push_back(v);
          out.emplace_back(v, d);
        }
      }
    }
    frontier.swap(next);
  }
  return out;
}

std::vector<Visit> pruned_dijkstra(const graphcore::Graph& g, std::uint32_t source,
                                   const std::vector<double>& delta) {
  std::vector<Visit> out;
  if (!(0.0 < delta[source])) return out;
  std::unordered_map<std::uint32_t, double> dist;
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist.emplace(source, 0.0);
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    out.emplace_back(u, d);
    for (std::size_t e = g.out_off[u]; e < g.out_off[u + 1]; ++e) {
      const std::uint32_t v = g.out_to[e];
      const double nd = d + g.out_w[e];
      if (!(nd < delta[v])) continue;
      auto [it, inserted] = dist.emplace(v, nd);
      if (!inserted) {
        if (!(nd < it->second)) continue;
        it->second = nd;
      }
      heap.emplace(nd, v);
    }
  }
  return out;
}

}  // namespace

std::vector<Visit> pruned_sssp(const graphcore::Graph& g, std::uint32_t source,
                               const std::vector<double>& delta) {
  return g.weighted ? pruned_dijkstra(g, source, delta) : pruned_bfs(g, source, delta);
}

LeListsResult le_lists_seq(const graphcore::Graph& g, const order::Permutation& perm) {
  LeListsResult result;
  result.lists.resize(g.n);
  std::vector<double> delta(g.n, graphcore::kUnreachable);
  for (std::uint32_t step = 0; step < perm.size(); ++step) {
    const std::uint32_t src = perm.order[step];
    const auto visits = pruned_sssp(g, src, delta);
    result.visits += visits.size();
    for (const auto& [u, d] : visits) {
      delta[u] = d;
      result.lists[u].push_back(LeEntry{src, d});
    }
  }
  return result;
}

LeListsResult le_lists_par(const graphcore::Graph& g, const order::Permutation& perm,
                           exec::ThreadPool& pool) {
  LeListsResult result;
  result.lists.resize(g.n);
  std::vector<double> delta(g.n, graphcore::kUnreachable);

  struct Triple {
    std::uint32_t target;
    std::uint32_t rank;
    double dist;
  };
  std::vector<Triple> flat;

  result.trace = exec::run_type3(
      pool, perm.size(),
      [&](std::size_t step) {
        // delta is frozen for the whole round: combine is the only writer
        // and runs after every search of the round has finished.
        return pruned_sssp(g, perm.order[step], delta);
      },
      [&](std::size_t lo, std::size_t, std::vector<std::vector<Visit>>& results) {
        flat.clear();
        for (std::size_t i = 0; i < results.size(); ++i) {
          result.visits += results[i].size();
          for (const auto& [u, d] : results[i])
            flat.push_back(Triple{u, static_cast<std::uint32_t>(lo + i), d});
        }
        // Semisort on targets + per-target sort by source rank, collapsed
        // into one lexicographic sort at this scale.
        std::sort(flat.begin(), flat.end(), [](const Triple& a, const Triple& b) {
          if (a.target != b.target) return a.target < b.target;
          return a.rank < b.rank;
        });
        std::size_t i = 0;
        while (i < flat.size()) {
          const std::uint32_t u = flat[i].target;
          double best = delta[u];
          for (; i < flat.size() && flat[i].target == u; ++i) {
            if (flat[i].dist < best) {
              best = flat[i].dist;
              result.lists[u].push_back(LeEntry{perm.order[flat[i].rank], flat[i].dist});
            }
          }
          delta[u] = best;
        }
      });
  return result;
}

}  // namespace incpar::lelists
