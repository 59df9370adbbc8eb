#include <doctest.h>

#include <sstream>

#include "incpar/graphcore.hpp"
#include "incpar/order.hpp"
#include "incpar/scc.hpp"
#include "oracles.hpp"

using namespace incpar;

TEST_CASE("parse_edge_list basics") {
  std::istringstream path("3 2\n0 1\n1 2\n");
  const auto g = graphcore::parse_edge_list(path);
  CHECK(g.n == 3);
  CHECK(g.m() == 2);
  CHECK(!g.weighted);
  CHECK(g.out_to[g.out_off[0]] == 1);

  std::istringstream w("2 1 weighted\n0 1 2.5\n");
  const auto gw = graphcore::parse_edge_list(w);
  CHECK(gw.weighted);
  CHECK(gw.out_w[0] == 2.5);

  std::istringstream bad("2 1\n0 5\n");
  CHECK_THROWS_AS((void)graphcore::parse_edge_list(bad), graphcore::ParseError);
  std::istringstream neg("2 1 weighted\n0 1 -3\n");
  CHECK_THROWS_AS((void)graphcore::parse_edge_list(neg), graphcore::ParseError);
  std::istringstream trunc("3 2\n0 1\n");
  CHECK_THROWS_AS((void)graphcore::parse_edge_list(trunc), graphcore::ParseError);
  try {
    std::istringstream again("2 1\n0 5\n");
    (void)graphcore::parse_edge_list(again);
  } catch (const graphcore::ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("edge list round-trips through the serializer") {
  const auto g = graphcore::gen_random_graph(40, 120, 5, true);
  std::istringstream re(graphcore::to_edge_list(g));
  const auto g2 = graphcore::parse_edge_list(re);
  CHECK(g2.n == g.n);
  CHECK(g2.out_off == g.out_off);
  CHECK(g2.out_to == g.out_to);
  CHECK(g2.out_w == g.out_w);
  CHECK(g2.in_to == g.in_to);
}

TEST_CASE("reverse adjacency is the exact transpose") {
  const auto g = graphcore::gen_random_graph(100, 400, 17, true);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> fwd, bwd;
  for (std::uint32_t u = 0; u < g.n; ++u) {
    for (std::size_t e = g.out_off[u]; e < g.out_off[u + 1]; ++e)
      fwd.emplace_back(u, g.out_to[e], g.out_w[e]);
    for (std::size_t e = g.in_off[u]; e < g.in_off[u + 1]; ++e)
      bwd.emplace_back(g.in_to[e], u, g.in_w[e]);
  }
  std::sort(fwd.begin(), fwd.end());
  std::sort(bwd.begin(), bwd.end());
  CHECK(fwd == bwd);
}

TEST_CASE("gen_random_graph matches a reference generator run") {
  // Reference drawing procedure: per edge u, v, then weight, straight off
  // the documented SplitMix64 stream with rejection-sampled bounds.
  const std::uint32_t n = 100;
  const std::uint64_t m = 300, seed = 9;
  const auto g = graphcore::gen_random_graph(n, m, seed, true);
  order::Rng rng(seed);
  std::vector<graphcore::Edge> expect;
  for (std::uint64_t i = 0; i < m; ++i) {
    graphcore::Edge e;
    e.u = static_cast<std::uint32_t>(rng.bounded(n));
    e.v = static_cast<std::uint32_t>(rng.bounded(n));
    e.w = rng.unit_positive();
    expect.push_back(e);
  }
  const auto g2 = graphcore::from_edges(n, expect, true);
  CHECK(g.out_off == g2.out_off);
  CHECK(g.out_to == g2.out_to);
  CHECK(g.out_w == g2.out_w);

  CHECK(graphcore::gen_random_graph(1, 0, 3, false).n == 1);
  const auto iso = graphcore::gen_random_graph(5, 0, 3, false);
  CHECK(iso.m() == 0);
  CHECK(graphcore::oracle_scc(iso) == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("oracle_sssp on paths and unreachable vertices") {
  std::istringstream path("3 2\n0 1\n1 2\n");
  const auto g = graphcore::parse_edge_list(path);
  const auto d = graphcore::oracle_sssp(g, 0);
  CHECK(d == std::vector<double>{0, 1, 2});
  const auto d2 = graphcore::oracle_sssp(g, 2);
  CHECK(d2[0] == graphcore::kUnreachable);
  CHECK(d2[2] == 0);
}

TEST_CASE("oracle_sssp weighted equals BFS on unit weights") {
  std::vector<graphcore::Edge> edges;
  const auto base = graphcore::gen_random_graph(60, 240, 21, false);
  for (std::uint32_t u = 0; u < base.n; ++u)
    for (std::size_t e = base.out_off[u]; e < base.out_off[u + 1]; ++e)
      edges.push_back({u, base.out_to[e], 1.0});
  const auto weighted = graphcore::from_edges(base.n, edges, true);
  for (std::uint32_t s = 0; s < 5; ++s)
    CHECK(graphcore::oracle_sssp(base, s) == graphcore::oracle_sssp(weighted, s));
}

TEST_CASE("oracle_scc examples and Kosaraju cross-check") {
  std::istringstream in("3 3\n0 1\n1 0\n1 2\n");
  const auto g = graphcore::parse_edge_list(in);
  const auto labels = graphcore::oracle_scc(g);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[0] != labels[2]);

  const auto rnd = graphcore::gen_random_graph(200, 800, 31, false);
  const auto tarjan = graphcore::oracle_scc(rnd);
  const auto kosaraju = oracles::kosaraju_ref(rnd);
  CHECK(scc::same_partition(tarjan, kosaraju));
}
