#include "incpar/bstsort.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace incpar::bstsort {

namespace {

constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

// Both modes reject duplicates the same way so the reported pair is
// identical regardless of mode: the first adjacent equal pair in key order,
// as (earlier step, later step).
void check_distinct(std::span<const double> keys) {
  const std::size_t n = keys.size();
  if (n < 2) return;
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return a < b;
  });
  for (std::size_t i = 1; i < n; ++i)
    if (keys[idx[i - 1]] == keys[idx[i]])
      throw DuplicateKey(idx[i - 1], idx[i]);
}

void finish(SortResult& result) {
  result.sorted = in_order(result.tree);
}

}  // namespace

SortResult sort_seq(std::span<const double> keys, dagmeter::IterationDag* meter) {
  check_distinct(keys);
  SortResult result;
  Bst& t = result.tree;
  t.nodes.resize(keys.size());
  if (meter)
    for (std::size_t i = 0; i < keys.size(); ++i)
      meter->add_node(static_cast<std::int64_t>(i));
  for (std::uint32_t i = 0; i < keys.size(); ++i) {
    t.nodes[i].key = keys[i];
    if (t.root < 0) {
      t.root = static_cast<std::int32_t>(i);
      continue;
    }
    std::int32_t cur = t.root;
    for (;;) {
      if (meter) meter->record_arc(static_cast<std::uint32_t>(cur), i);
      std::int32_t& slot = keys[i] < t.nodes[cur].key ? t.nodes[cur].left : t.nodes[cur].right;
      if (slot < 0) {
        slot = static_cast<std::int32_t>(i);
        break;
      }
      cur = slot;
    }
  }
  finish(result);
  return result;
}

SortResult sort_par(std::span<const double> keys, exec::ThreadPool& pool) {
  check_distinct(keys);
  SortResult result;
  const std::size_t n = keys.size();
  result.tree.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.tree.nodes[i].key = keys[i];
  if (n == 0) return result;

  // Cell layout: cell 0 is the root slot, cell 1 + 2*v + side is the
  // left/right child slot of node v.  Cells are the tree pointers; a cell
  // receives writes in exactly one round, and its value is final after the
  // round barrier because fetch-min commutes.
  std::vector<std::atomic<std::uint32_t>> cells(1 + 2 * n);
  for (auto& c : cells) c.store(kEmpty, std::memory_order_relaxed);

  std::vector<std::uint32_t> pending(n), next_pending;
  std::vector<std::size_t> pos(n, 0);  // current cell of each pending key
  std::iota(pending.begin(), pending.end(), 0u);
  std::vector<std::uint8_t> attached(n, 0);

  std::uint32_t rounds = 0;
  while (!pending.empty()) {
    ++rounds;
    pool.parallel_for(0, pending.size(), 256, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t p = lo; p < hi; ++p) {
        const std::uint32_t k = pending[p];
        auto& cell = cells[pos[k]];
        std::uint32_t cur = cell.load(std::memory_order_relaxed);
        while (k < cur &&
               !cell.compare_exchange_weak(cur, k, std::memory_order_relaxed)) {
        }
      }
    });
    pool.parallel_for(0, pending.size(), 256, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t p = lo; p < hi; ++p) {
        const std::uint32_t k = pending[p];
        const std::uint32_t winner = cells[pos[k]].load(std::memory_order_relaxed);
        if (winner == k) {
          attached[k] = 1;
        } else {
          const bool go_left = keys[k] < keys[winner];
          pos[k] = 1 + 2 * static_cast<std::size_t>(winner) + (go_left ? 0 : 1);
        }
      }
    });
    next_pending.clear();
    for (std::uint32_t k : pending)
      if (!attached[k]) next_pending.push_back(k);
    pending.swap(next_pending);
  }

  Bst& t = result.tree;
  t.root = static_cast<std::int32_t>(cells[0].load(std::memory_order_relaxed));
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t l = cells[1 + 2 * v].load(std::memory_order_relaxed);
    const std::uint32_t r = cells[1 + 2 * v + 1].load(std::memory_order_relaxed);
    t.nodes[v].left = l == kEmpty ? -1 : static_cast<std::int32_t>(l);
    t.nodes[v].right = r == kEmpty ? -1 : static_cast<std::int32_t>(r);
  }
  result.rounds = rounds;
  finish(result);
  return result;
}

std::uint32_t height(const Bst& tree) {
  if (tree.root < 0) return 0;
  std::uint32_t best = 0;
  std::vector<std::pair<std::int32_t, std::uint32_t>> stack{{tree.root, 1u}};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (tree.nodes[v].left >= 0) stack.emplace_back(tree.nodes[v].left, d + 1);
    if (tree.nodes[v].right >= 0) stack.emplace_back(tree.nodes[v].right, d + 1);
  }
  return best;
}

std::vector<double> in_order(const Bst& tree) {
  std::vector<double> out;
  out.reserve(tree.nodes.size());
  std::vector<std::int32_t> stack;
  std::int32_t cur = tree.root;
  while (cur >= 0 || !stack.empty()) {
    while (cur >= 0) {
      stack.push_back(cur);
      cur = tree.nodes[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(tree.nodes[cur].key);
    cur = tree.nodes[cur].right;
  }
  return out;
}

}  // namespace incpar::bstsort
