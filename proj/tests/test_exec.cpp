#include <doctest.h>

#include <atomic>
#include <numeric>
#include <vector>

#include "incpar/exec.hpp"

using namespace incpar;

TEST_CASE("parallel_for covers the range exactly once") {
  for (unsigned threads : {1u, 2u, 4u}) {
    exec::ThreadPool pool(threads);
    std::vector<std::atomic<int>> hits(10000);
    pool.parallel_for(0, hits.size(), 64, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) hits[i].fetch_add(1);
    });
    for (const auto& h : hits) REQUIRE(h.load() == 1);
  }
}

TEST_CASE("parallel_for propagates the lowest failing block") {
  exec::ThreadPool pool(4);
  try {
    pool.parallel_for(0, 1000, 1, [&](std::size_t lo, std::size_t) {
      if (lo >= 100) throw std::runtime_error("boom " + std::to_string(lo));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "boom 100");
  }
  // pool still usable afterwards
  std::atomic<int> count{0};
  pool.parallel_for(0, 100, 8, [&](std::size_t lo, std::size_t hi) {
    count += static_cast<int>(hi - lo);
  });
  CHECK(count.load() == 100);
}

TEST_CASE("blocked_reduce is thread-count independent") {
  std::vector<double> values(100000);
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = 1.0 / static_cast<double>(i + 1);
  auto run = [&](unsigned threads) {
    exec::ThreadPool pool(threads);
    return exec::blocked_reduce(
        pool, 0, values.size(), 1024, 0.0,
        [&](std::size_t lo, std::size_t hi) {
          double s = 0.0;
          for (std::size_t i = lo; i < hi; ++i) s += values[i];
          return s;
        },
        [](double a, double b) { return a + b; });
  };
  const double t1 = run(1);
  CHECK(t1 == run(2));
  CHECK(t1 == run(5));
}

TEST_CASE("run_type2 with no specials partitions into doubling prefixes") {
  exec::ThreadPool pool(2);
  std::vector<int> ran(8, 0);
  const auto trace = exec::run_type2(
      pool, 8, [](std::size_t) { return false; },
      [&](std::size_t k) { ran[k] += 1; },
      [&](std::size_t k) {
        CHECK(k == 0);
        ran[k] += 1;
      });
  for (const int r : ran) CHECK(r == 1);
  CHECK(trace.per_round_sizes == std::vector<std::uint64_t>{1, 1, 2, 4});
  CHECK(trace.rounds == 4);
  CHECK(trace.sub_rounds == 3);  // one per prefix
}

TEST_CASE("run_type2 executes the sequential (regular, special) order") {
  exec::ThreadPool pool(4);
  // special only at step 3 of 8: steps 1,2 regular, 3 special, 4..7 regular
  std::vector<std::string> kinds(8);
  std::atomic<int> specials{0};
  exec::run_type2(
      pool, 8, [](std::size_t k) { return k == 3; },
      [&](std::size_t k) { kinds[k] = "regular"; },
      [&](std::size_t k) {
        kinds[k] = "special";
        specials += 1;
      });
  CHECK(kinds == std::vector<std::string>{"special", "regular", "regular", "special", "regular",
                                          "regular", "regular", "regular"});
  CHECK(specials.load() == 2);

  // state equals a plain sequential run: cumulative sum with a special that doubles
  for (unsigned threads : {1u, 3u}) {
    exec::ThreadPool p2(threads);
    long state = 0;
    exec::run_type2(
        p2, 100, [&](std::size_t k) { return k % 17 == 0; },
        [&](std::size_t) {}, [&](std::size_t k) { state = 2 * state + static_cast<long>(k); });
    long expect = 0;
    for (std::size_t k = 0; k < 100; ++k)
      if (k % 17 == 0) expect = 2 * expect + static_cast<long>(k);
    CHECK(state == expect);
  }
}

TEST_CASE("run_type2 ragged final prefix and n=1") {
  exec::ThreadPool pool(2);
  std::atomic<int> count{0};
  auto trace = exec::run_type2(
      pool, 5, [](std::size_t) { return false; }, [&](std::size_t) { count += 1; },
      [&](std::size_t) { count += 1; });
  CHECK(count.load() == 5);
  CHECK(trace.per_round_sizes == std::vector<std::uint64_t>{1, 1, 2, 1});

  trace = exec::run_type2(
      pool, 1, [](std::size_t) { return false; }, [](std::size_t) {},
      [](std::size_t) {});
  CHECK(trace.rounds == 1);
  CHECK(trace.per_round_sizes == std::vector<std::uint64_t>{1});
  CHECK(trace.sub_rounds == 0);
}

TEST_CASE("run_type2 sub_rounds bounded by specials plus log") {
  exec::ThreadPool pool(2);
  std::size_t specials = 0;
  const std::size_t n = 1000;
  const auto trace = exec::run_type2(
      pool, n, [](std::size_t k) { return k % 31 == 7; }, [](std::size_t) {},
      [&](std::size_t k) {
        if (k > 0) specials += 1;
      });
  CHECK(trace.sub_rounds <= specials + 11);  // ceil(log2 1000) + 1 = 11
}

TEST_CASE("run_type3 round structure and combine order") {
  exec::ThreadPool pool(4);
  std::vector<std::size_t> combined;
  const auto trace = exec::run_type3(
      pool, 8, [](std::size_t k) { return k; },
      [&](std::size_t lo, std::size_t hi, std::vector<std::size_t>& results) {
        REQUIRE(results.size() == hi - lo);
        for (std::size_t i = 0; i < results.size(); ++i) REQUIRE(results[i] == lo + i);
        combined.insert(combined.end(), results.begin(), results.end());
      });
  CHECK(trace.rounds == 4);
  CHECK(trace.per_round_sizes == std::vector<std::uint64_t>{1, 1, 2, 4});
  std::vector<std::size_t> expect(8);
  std::iota(expect.begin(), expect.end(), 0u);
  CHECK(combined == expect);

  CHECK(exec::run_type3(pool, 1, [](std::size_t) { return 0; },
                        [](std::size_t, std::size_t, std::vector<int>&) {})
            .rounds == 1);
}

TEST_CASE("run_type3 rounds bound for many sizes") {
  exec::ThreadPool pool(1);
  for (std::size_t n : {1u, 2u, 3u, 5u, 16u, 17u, 1000u}) {
    const auto trace = exec::run_type3(
        pool, n, [](std::size_t) { return 0; },
        [](std::size_t, std::size_t, std::vector<int>&) {});
    const auto bound = static_cast<std::uint32_t>(std::ceil(std::log2(double(n)))) + 1;
    CHECK(trace.rounds <= bound);
    std::uint64_t total = 0;
    for (const auto s : trace.per_round_sizes) total += s;
    CHECK(total == n);
  }
}

TEST_CASE("driver failures surface the step index") {
  exec::ThreadPool pool(2);
  try {
    exec::run_type2(
        pool, 8, [](std::size_t k) { return k == 3; }, [](std::size_t) {},
        [](std::size_t k) {
          if (k == 3) throw std::runtime_error("special failed");
        });
    FAIL("expected StepError");
  } catch (const exec::StepError& e) {
    CHECK(e.step() == 3);
  }
  try {
    exec::run_type3(
        pool, 8,
        [](std::size_t k) {
          if (k >= 2) throw std::runtime_error("step failed");
          return 0;
        },
        [](std::size_t, std::size_t, std::vector<int>&) {});
    FAIL("expected StepError");
  } catch (const exec::StepError& e) {
    CHECK(e.step() == 2);
  }
}
