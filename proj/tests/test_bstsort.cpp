#include <doctest.h>

#include <algorithm>
#include <vector>

#include "incpar/bstsort.hpp"
#include "incpar/datasets.hpp"
#include "incpar/order.hpp"

using namespace incpar;

namespace {

bool same_tree(const bstsort::Bst& a, const bstsort::Bst& b) {
  if (a.root != b.root || a.nodes.size() != b.nodes.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    if (a.nodes[i].left != b.nodes[i].left || a.nodes[i].right != b.nodes[i].right ||
        a.nodes[i].key != b.nodes[i].key)
      return false;
  return true;
}

// reachability-based transitive reduction of a small DAG
std::vector<std::pair<std::uint32_t, std::uint32_t>> transitive_reduction(
    const dagmeter::IterationDag& dag) {
  const auto arcs = dag.arcs();
  const auto n = dag.node_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : arcs) reach[u][v] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& [u, v] : arcs) {
    bool redundant = false;
    for (std::size_t w = 0; w < n && !redundant; ++w)
      if (w != u && w != v && reach[u][w] && reach[w][v]) redundant = true;
    if (!redundant) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sort_seq small examples") {
  const auto r = bstsort::sort_seq(std::vector<double>{2, 1, 3});
  CHECK(r.tree.root == 0);
  CHECK(r.tree.nodes[0].left == 1);
  CHECK(r.tree.nodes[0].right == 2);
  CHECK(r.sorted == std::vector<double>{1, 2, 3});

  const auto chain = bstsort::sort_seq(std::vector<double>{1, 2, 3});
  CHECK(bstsort::height(chain.tree) == 3);
  CHECK(chain.tree.nodes[0].right == 1);
  CHECK(chain.tree.nodes[1].right == 2);

  const auto empty = bstsort::sort_seq(std::vector<double>{});
  CHECK(empty.tree.root == -1);
  CHECK(bstsort::height(empty.tree) == 0);
  CHECK(empty.sorted.empty());
}

TEST_CASE("duplicate keys are rejected with the offending pair") {
  const std::vector<double> keys{1, 5, 3, 5, 2};
  CHECK_THROWS_AS((void)bstsort::sort_seq(keys), bstsort::DuplicateKey);
  try {
    (void)bstsort::sort_seq(keys);
  } catch (const bstsort::DuplicateKey& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 3);
  }
  exec::ThreadPool pool(2);
  try {
    (void)bstsort::sort_par(keys, pool);
    FAIL("expected DuplicateKey");
  } catch (const bstsort::DuplicateKey& e) {
    CHECK(e.first() == 1);  // identical pair in both modes
    CHECK(e.second() == 3);
  }
}

TEST_CASE("sort_par equals sort_seq and rounds equal tree height") {
  exec::ThreadPool pool(4);

  const auto small = bstsort::sort_par(std::vector<double>{2, 1, 3}, pool);
  CHECK(small.rounds == 2);
  CHECK(same_tree(small.tree, bstsort::sort_seq(std::vector<double>{2, 1, 3}).tree));

  const auto single = bstsort::sort_par(std::vector<double>{5}, pool);
  CHECK(single.rounds == 1);
  CHECK(bstsort::height(single.tree) == 1);

  const auto keys = datasets::random_keys(1000, 7);
  const auto par = bstsort::sort_par(keys, pool);
  const auto seq = bstsort::sort_seq(keys);
  CHECK(same_tree(par.tree, seq.tree));
  CHECK(par.sorted == seq.sorted);
  CHECK(par.rounds == bstsort::height(par.tree));

  auto expect = keys;
  std::sort(expect.begin(), expect.end());
  CHECK(par.sorted == expect);
}

TEST_CASE("sort_par is thread-count independent") {
  const auto keys = datasets::random_keys(500, 99);
  exec::ThreadPool p1(1), p3(3);
  const auto a = bstsort::sort_par(keys, p1);
  const auto b = bstsort::sort_par(keys, p3);
  CHECK(same_tree(a.tree, b.tree));
  CHECK(a.rounds == b.rounds);
}

TEST_CASE("in-order traversal is strictly increasing") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto keys = datasets::random_keys(300, seed);
    const auto r = bstsort::sort_seq(keys);
    for (std::size_t i = 1; i < r.sorted.size(); ++i) REQUIRE(r.sorted[i - 1] < r.sorted[i]);
  }
}

TEST_CASE("metered dependences reduce to the tree itself") {
  // Each inserted key records arcs from its whole search path; the
  // transitive reduction of that DAG is exactly the parent-child structure.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto keys = datasets::random_keys(48, 1000 + seed);
    dagmeter::IterationDag meter;
    const auto r = bstsort::sort_seq(keys, &meter);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    for (std::uint32_t v = 0; v < r.tree.nodes.size(); ++v) {
      if (r.tree.nodes[v].left >= 0)
        tree_edges.emplace_back(v, static_cast<std::uint32_t>(r.tree.nodes[v].left));
      if (r.tree.nodes[v].right >= 0)
        tree_edges.emplace_back(v, static_cast<std::uint32_t>(r.tree.nodes[v].right));
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    REQUIRE(transitive_reduction(meter) == tree_edges);
  }
}

TEST_CASE("direct dependence is the in-order neighbor among earlier keys") {
  // The parent of key k is its predecessor or successor among keys 0..k-1.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto keys = datasets::random_keys(64, 2000 + seed);
    const auto r = bstsort::sort_seq(keys);
    std::vector<std::int32_t> parent(keys.size(), -1);
    for (std::uint32_t v = 0; v < r.tree.nodes.size(); ++v) {
      if (r.tree.nodes[v].left >= 0) parent[r.tree.nodes[v].left] = static_cast<std::int32_t>(v);
      if (r.tree.nodes[v].right >= 0) parent[r.tree.nodes[v].right] = static_cast<std::int32_t>(v);
    }
    for (std::uint32_t k = 1; k < keys.size(); ++k) {
      double pred = -1e300, succ = 1e300;
      std::int32_t pred_i = -1, succ_i = -1;
      for (std::uint32_t e = 0; e < k; ++e) {
        if (keys[e] < keys[k] && keys[e] > pred) {
          pred = keys[e];
          pred_i = static_cast<std::int32_t>(e);
        }
        if (keys[e] > keys[k] && keys[e] < succ) {
          succ = keys[e];
          succ_i = static_cast<std::int32_t>(e);
        }
      }
      REQUIRE((parent[k] == pred_i || parent[k] == succ_i));
    }
  }
}
