#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "incpar/dagmeter.hpp"

using namespace incpar;

TEST_CASE("record_arc basics and idempotence") {
  dagmeter::IterationDag dag;
  const auto a = dag.add_node();
  const auto b = dag.add_node();
  dag.record_arc(a, b);
  CHECK(dag.arc_count() == 1);
  dag.record_arc(a, b);
  CHECK(dag.arc_count() == 1);  // duplicate is idempotent
  CHECK_THROWS_AS(dag.record_arc(b, a), std::invalid_argument);
  CHECK_THROWS_AS(dag.record_arc(a, a), std::invalid_argument);
  CHECK_THROWS_AS(dag.record_arc(a, 5), std::invalid_argument);
}

TEST_CASE("longest_path on small shapes") {
  dagmeter::IterationDag empty;
  for (int i = 0; i < 5; ++i) empty.add_node();
  CHECK(empty.longest_path() == 0);

  dagmeter::IterationDag chain;
  for (int i = 0; i < 4; ++i) chain.add_node();
  chain.record_arc(0, 1);
  chain.record_arc(1, 2);
  chain.record_arc(2, 3);
  CHECK(chain.longest_path() == 3);

  dagmeter::IterationDag diamond;
  for (int i = 0; i < 4; ++i) diamond.add_node();
  diamond.record_arc(0, 1);
  diamond.record_arc(0, 2);
  diamond.record_arc(1, 3);
  diamond.record_arc(2, 3);
  CHECK(diamond.longest_path() == 2);
}

TEST_CASE("harmonic sum matches the direct value") {
  CHECK(dagmeter::harmonic(1) == 1.0);
  CHECK(dagmeter::harmonic(2) == doctest::Approx(1.5).epsilon(1e-15));
  double direct = 0.0;
  for (int i = 1; i <= 100000; ++i) direct += 1.0 / i;
  CHECK(dagmeter::harmonic(100000) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("depth stats and aggregation") {
  const auto s = dagmeter::make_depth_stats(10, 1000);
  CHECK(s.ratio_to_ln_n == doctest::Approx(10.0 / std::log(1000.0)));
  CHECK(dagmeter::make_depth_stats(3, 1).ratio_to_ln_n == 0.0);

  std::vector<dagmeter::DepthStats> runs{dagmeter::make_depth_stats(3, 64)};
  auto agg = dagmeter::aggregate(runs);
  CHECK(agg.mean_depth == 3.0);
  CHECK(agg.max_depth == 3);

  runs = {dagmeter::make_depth_stats(2, 64), dagmeter::make_depth_stats(4, 64)};
  agg = dagmeter::aggregate(runs);
  CHECK(agg.mean_depth == 3.0);
  CHECK(agg.max_depth == 4);

  CHECK_THROWS_AS(dagmeter::aggregate({}), std::invalid_argument);
  runs = {dagmeter::make_depth_stats(2, 64), dagmeter::make_depth_stats(4, 65)};
  CHECK_THROWS_AS(dagmeter::aggregate(runs), std::invalid_argument);
}

TEST_CASE("arcs come back deduplicated and sorted") {
  dagmeter::IterationDag dag;
  for (int i = 0; i < 3; ++i) dag.add_node(i);
  dag.record_arc(0, 2);
  dag.record_arc(0, 1);
  dag.record_arc(0, 2);
  dag.record_arc(1, 2);
  const auto arcs = dag.arcs();
  REQUIRE(arcs.size() == 3);
  CHECK(arcs[0] == std::pair<std::uint32_t, std::uint32_t>{0, 1});
  CHECK(arcs[1] == std::pair<std::uint32_t, std::uint32_t>{0, 2});
  CHECK(arcs[2] == std::pair<std::uint32_t, std::uint32_t>{1, 2});
  CHECK(dag.label(1) == 1);
}
