#include "incpar/scc.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace incpar::scc {

namespace {

// Reusable search workspace: epoch-stamped visited marks avoid an O(n)
// reset per search.
struct ReachScratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> frontier;

  void reset(std::uint32_t n) {
    if (stamp.size() != n) {
      stamp.assign(n, 0);
      epoch = 0;
    }
  }
};

std::vector<std::uint32_t> reach_impl(const graphcore::Graph& g,
                                      const std::vector<std::uint32_t>& part,
                                      std::uint32_t source, bool forward,
                                      ReachScratch& scratch) {
  const auto& off = forward ? g.out_off : g.in_off;
  const auto& to = forward ? g.out_to : g.in_to;
  const std::uint32_t home = part[source];
  scratch.reset(g.n);
  const std::uint32_t mark = ++scratch.epoch;
  if (mark == 0) {  // epoch wrapped; start over
    scratch.stamp.assign(g.n, 0);
    scratch.epoch = 1;
  }
  std::vector<std::uint32_t> out{source};
  scratch.stamp[source] = scratch.epoch;
  std::size_t head = 0;
  while (head < out.size()) {
    const std::uint32_t u = out[head++];
    for (std::size_t e = off[u]; e < off[u + 1]; ++e) {
      const std::uint32_t v = to[e];
      if (part[v] == home && scratch.stamp[v] != scratch.epoch) {
        scratch.stamp[v] = scratch.epoch;
        out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> restricted_reach(const graphcore::Graph& g,
                                            const std::vector<std::uint32_t>& part,
                                            std::uint32_t source, bool forward) {
  if (source >= g.n || part[source] == kDeadPart)
    throw std::invalid_argument("restricted_reach: dead or out-of-range source");
  ReachScratch scratch;
  return reach_impl(g, part, source, forward, scratch);
}

SccResult scc_seq(const graphcore::Graph& g, const order::Permutation& perm) {
  SccResult result;
  result.labels.assign(g.n, kUnlabeled);
  std::vector<std::uint32_t> part(g.n, 0);
  std::uint32_t next_part = 1;
  ReachScratch scratch;
  std::vector<std::uint8_t> in_scc(g.n, 0);

  for (std::uint32_t step = 0; step < perm.size(); ++step) {
    const std::uint32_t v = perm.order[step];
    if (part[v] == kDeadPart) continue;

    const auto fwd = reach_impl(g, part, v, true, scratch);
    const auto bwd = reach_impl(g, part, v, false, scratch);
    result.visits += fwd.size() + bwd.size();

    // V_scc = fwd intersect bwd; mark bwd members, then test fwd.
    for (const std::uint32_t u : bwd) in_scc[u] = 1;
    const std::uint32_t comp = result.components++;
    for (const std::uint32_t u : fwd) {
      if (in_scc[u]) {
        result.labels[u] = comp;
        part[u] = kDeadPart;
      }
    }
    for (const std::uint32_t u : bwd) in_scc[u] = 0;

    // Split the rest of the partition: forward-only and backward-only
    // survivors each get a fresh id; the unreached remainder keeps its id.
    const std::uint32_t fwd_part = next_part++;
    const std::uint32_t bwd_part = next_part++;
    for (const std::uint32_t u : fwd)
      if (part[u] != kDeadPart) part[u] = fwd_part;
    for (const std::uint32_t u : bwd)
      if (part[u] != kDeadPart) part[u] = bwd_part;
  }
  return result;
}

SccResult scc_par(const graphcore::Graph& g, const order::Permutation& perm,
                  exec::ThreadPool& pool) {
  SccResult result;
  result.labels.assign(g.n, kUnlabeled);
  std::vector<std::uint32_t> part(g.n, 0);
  std::uint32_t next_part = 1;

  struct SearchOut {
    std::vector<std::uint32_t> fwd, bwd;
    bool ran = false;
  };

  std::vector<ReachScratch> scratch(pool.thread_count());

  // Per-vertex hit records for the round, rebuilt in the combine.
  struct Hit {
    std::uint32_t vertex;
    std::uint32_t rank;
    std::uint8_t dir;  // 0 = fwd, 1 = bwd
  };
  std::vector<Hit> hits;

  result.trace = exec::run_type3(
      pool, perm.size(),
      [&](std::size_t step) {
        SearchOut out;
        const std::uint32_t v = perm.order[step];
        if (part[v] == kDeadPart) return out;  // dead at round start
        auto& ws = scratch[exec::ThreadPool::current_worker()];
        out.fwd = reach_impl(g, part, v, true, ws);
        out.bwd = reach_impl(g, part, v, false, ws);
        out.ran = true;
        return out;
      },
      [&](std::size_t lo, std::size_t, std::vector<SearchOut>& results) {
        hits.clear();
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (!results[i].ran) continue;
          const auto rank = static_cast<std::uint32_t>(lo + i);
          result.visits += results[i].fwd.size() + results[i].bwd.size();
          for (const std::uint32_t u : results[i].fwd) hits.push_back(Hit{u, rank, 0});
          for (const std::uint32_t u : results[i].bwd) hits.push_back(Hit{u, rank, 1});
        }

        // A pivot's fwd/bwd intersection inside its round-start partition is
        // exactly its component; ranks ascend so the earliest pivot in each
        // component claims it.
        std::unordered_set<std::uint32_t> fwd_set;
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (!results[i].ran) continue;
          const std::uint32_t pivot = perm.order[lo + i];
          if (result.labels[pivot] != kUnlabeled) continue;  // claimed this round
          fwd_set.clear();
          fwd_set.insert(results[i].fwd.begin(), results[i].fwd.end());
          const std::uint32_t comp = result.components++;
          for (const std::uint32_t u : results[i].bwd) {
            if (fwd_set.count(u)) {
              result.labels[u] = comp;
              part[u] = kDeadPart;
            }
          }
        }

        // Eager cut: group surviving vertices by (old part, signature of
        // (rank, dir) hits); every group with hits gets a fresh part id.
        std::vector<Hit> alive_hits;
        alive_hits.reserve(hits.size());
        for (const Hit& h : hits)
          if (part[h.vertex] != kDeadPart) alive_hits.push_back(h);
        std::sort(alive_hits.begin(), alive_hits.end(), [](const Hit& a, const Hit& b) {
          if (a.vertex != b.vertex) return a.vertex < b.vertex;
          if (a.rank != b.rank) return a.rank < b.rank;
          return a.dir < b.dir;
        });

        // Spans of equal vertex in alive_hits -> signature slices.
        struct VertexSig {
          std::uint32_t vertex;
          std::uint32_t old_part;
          std::size_t begin, end;
        };
        std::vector<VertexSig> sigs;
        for (std::size_t i = 0; i < alive_hits.size();) {
          std::size_t j = i;
          while (j < alive_hits.size() && alive_hits[j].vertex == alive_hits[i].vertex) ++j;
          sigs.push_back(VertexSig{alive_hits[i].vertex, part[alive_hits[i].vertex], i, j});
          i = j;
        }
        auto sig_less = [&](const VertexSig& a, const VertexSig& b) {
          if (a.old_part != b.old_part) return a.old_part < b.old_part;
          const std::size_t la = a.end - a.begin, lb = b.end - b.begin;
          for (std::size_t k = 0; k < std::min(la, lb); ++k) {
            const Hit& x = alive_hits[a.begin + k];
            const Hit& y = alive_hits[b.begin + k];
            if (x.rank != y.rank) return x.rank < y.rank;
            if (x.dir != y.dir) return x.dir < y.dir;
          }
          if (la != lb) return la < lb;
          return a.vertex < b.vertex;
        };
        auto sig_equal = [&](const VertexSig& a, const VertexSig& b) {
          if (a.old_part != b.old_part) return false;
          if (a.end - a.begin != b.end - b.begin) return false;
          for (std::size_t k = 0; k < a.end - a.begin; ++k) {
            const Hit& x = alive_hits[a.begin + k];
            const Hit& y = alive_hits[b.begin + k];
            if (x.rank != y.rank || x.dir != y.dir) return false;
          }
          return true;
        };
        std::sort(sigs.begin(), sigs.end(), sig_less);
        for (std::size_t i = 0; i < sigs.size();) {
          std::size_t j = i;
          const std::uint32_t fresh = next_part++;
          while (j < sigs.size() && sig_equal(sigs[i], sigs[j])) {
            part[sigs[j].vertex] = fresh;
            ++j;
          }
          i = j;
        }
      });
  return result;
}

bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<std::uint32_t, std::uint32_t> a2b, b2a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [ita, oka] = a2b.emplace(a[i], b[i]);
    if (!oka && ita->second != b[i]) return false;
    const auto [itb, okb] = b2a.emplace(b[i], a[i]);
    if (!okb && itb->second != a[i]) return false;
  }
  return true;
}

}  // namespace incpar::scc
