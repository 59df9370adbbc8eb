#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace incpar::exec {

// Fork-join pool with a fixed thread count (the caller participates, so k
// threads means k-1 workers).  parallel_for hands out blocks of the range
// and blocks the caller until everything is done.  Exceptions thrown by the
// body are rethrown on the caller; when several blocks fail, the one with
// the lowest start index wins, so error surfacing is deterministic.
//
// Nested parallel_for calls are not supported; all drivers in this project
// issue parallelism from the round loop only.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned thread_count() const { return threads_; }

  // body(lo, hi) over disjoint blocks covering [begin, end), each at most
  // `grain` long.  With one thread, runs body(begin, end) inline.
  void parallel_for(std::size_t begin, std::size_t end, std::size_t grain,
                    const std::function<void(std::size_t, std::size_t)>& body);

  // Index of the executing thread within the pool: 0 for the caller,
  // 1..k-1 for workers.  Valid inside a parallel_for body.
  static unsigned current_worker();

  // INCPAR_THREADS env var if set, else hardware concurrency, else 1.
  static unsigned default_threads();

 private:
  void worker_loop(unsigned index);
  void run_chunks();

  unsigned threads_;
  std::vector<std::thread> workers_;

  std::mutex m_;
  std::condition_variable cv_work_;
  std::condition_variable cv_done_;
  std::uint64_t job_id_ = 0;
  bool stop_ = false;

  // current job
  const std::function<void(std::size_t, std::size_t)>* body_ = nullptr;
  std::size_t job_end_ = 0;
  std::size_t job_grain_ = 1;
  std::atomic<std::size_t> cursor_{0};
  std::atomic<std::size_t> items_done_{0};
  std::size_t job_total_ = 0;
  unsigned active_ = 0;
  std::exception_ptr error_;
  std::size_t error_block_ = 0;
};

// Fixed-shape reduction: [begin, end) is cut into blocks of `block` steps,
// partial results are computed in parallel and combined serially in block
// order.  The combining tree therefore does not depend on the thread count,
// which keeps floating-point results schedule-independent.
template <class T, class MapBlock, class Combine>
T blocked_reduce(ThreadPool& pool, std::size_t begin, std::size_t end,
                 std::size_t block, T init, MapBlock&& map_block, Combine&& comb) {
  if (begin >= end) return init;
  const std::size_t nblocks = (end - begin + block - 1) / block;
  std::vector<T> partials(nblocks, init);
  pool.parallel_for(0, nblocks, 1, [&](std::size_t blo, std::size_t bhi) {
    for (std::size_t b = blo; b < bhi; ++b) {
      const std::size_t lo = begin + b * block;
      const std::size_t hi = std::min(end, lo + block);
      partials[b] = map_block(lo, hi);
    }
  });
  T acc = init;
  for (std::size_t b = 0; b < nblocks; ++b) acc = comb(acc, partials[b]);
  return acc;
}

// Per-run round/sub-round counts recorded by the drivers.
struct RoundTrace {
  std::uint32_t rounds = 0;
  std::uint32_t sub_rounds = 0;
  std::vector<std::uint64_t> per_round_sizes;
};

// A callback failure inside a driver, annotated with the step that failed.
class StepError : public std::runtime_error {
 public:
  StepError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

namespace detail {

template <class F, class... Args>
auto guard_step(std::size_t step, F&& f, Args&&... args)
    -> decltype(f(std::forward<Args>(args)...)) {
  try {
    return f(std::forward<Args>(args)...);
  } catch (const StepError&) {
    throw;
  } catch (const std::exception& e) {
    throw StepError(step, e.what());
  } catch (...) {
    throw StepError(step, "unknown error");
  }
}

}  // namespace detail

// Prefix-doubling driver for algorithms whose rare "special" steps depend on
// the whole prefix while regular steps are independent of each other.
//
// Step 0 always runs as special.  Prefixes are [1,2), [2,4), ... with a
// ragged final prefix when n is not a power of two.  Within a prefix, each
// sub-round evaluates check_special over the remaining steps against the
// state with every step before the frontier complete, runs the regular block
// before the first special concurrently, then runs that special alone.
//
// prepare(frontier, prefix_end) runs single-threaded before each sub-round's
// checks; algorithms that need per-sub-round scratch (e.g. a grid over the
// pending block) build it there.
template <class CheckFn, class RegularFn, class SpecialFn, class PrepareFn>
RoundTrace run_type2(ThreadPool& pool, std::size_t n, CheckFn&& check_special,
                     RegularFn&& run_regular, SpecialFn&& run_special,
                     PrepareFn&& prepare_subround) {
  RoundTrace trace;
  if (n == 0) return trace;

  detail::guard_step(0, run_special, std::size_t{0});
  trace.rounds = 1;
  trace.per_round_sizes.push_back(1);

  std::vector<std::uint8_t> flags;
  std::size_t lo = 1;
  while (lo < n) {
    const std::size_t hi = std::min(lo * 2, n);
    trace.rounds += 1;
    trace.per_round_sizes.push_back(hi - lo);

    std::size_t j = lo;
    while (j < hi) {
      trace.sub_rounds += 1;
      detail::guard_step(j, prepare_subround, j, hi);

      flags.assign(hi - j, 0);
      pool.parallel_for(j, hi, 64, [&](std::size_t blo, std::size_t bhi) {
        for (std::size_t k = blo; k < bhi; ++k)
          flags[k - j] = detail::guard_step(k, check_special, k) ? 1 : 0;
      });

      std::size_t first_special = hi;
      for (std::size_t k = j; k < hi; ++k) {
        if (flags[k - j]) {
          first_special = k;
          break;
        }
      }

      if (first_special > j) {
        pool.parallel_for(j, first_special, 64, [&](std::size_t blo, std::size_t bhi) {
          for (std::size_t k = blo; k < bhi; ++k)
            detail::guard_step(k, run_regular, k);
        });
      }

      if (first_special < hi) {
        detail::guard_step(first_special, run_special, first_special);
        j = first_special + 1;
      } else {
        j = hi;
      }
    }
    lo = hi;
  }
  return trace;
}

template <class CheckFn, class RegularFn, class SpecialFn>
RoundTrace run_type2(ThreadPool& pool, std::size_t n, CheckFn&& check_special,
                     RegularFn&& run_regular, SpecialFn&& run_special) {
  return run_type2(pool, n, std::forward<CheckFn>(check_special),
                   std::forward<RegularFn>(run_regular),
                   std::forward<SpecialFn>(run_special),
                   [](std::size_t, std::size_t) {});
}

// Doubling-rounds driver for algorithms with separating dependences.  Round
// i runs steps [2^{i-1}, 2^i) concurrently against the state frozen at the
// round start (step 0 runs alone first), then hands the results, ordered by
// step index, to combine.  combine(lo, hi, results) must restore the
// sequential-equivalent state before the next round begins.
template <class StepFn, class CombineFn>
RoundTrace run_type3(ThreadPool& pool, std::size_t n, StepFn&& run_step,
                     CombineFn&& combine) {
  using R = std::decay_t<decltype(run_step(std::size_t{0}))>;
  RoundTrace trace;
  std::size_t lo = 0;
  while (lo < n) {
    const std::size_t hi = lo == 0 ? 1 : std::min(lo * 2, n);
    trace.rounds += 1;
    trace.per_round_sizes.push_back(hi - lo);

    std::vector<R> results(hi - lo);
    pool.parallel_for(lo, hi, 1, [&](std::size_t blo, std::size_t bhi) {
      for (std::size_t k = blo; k < bhi; ++k)
        results[k - lo] = detail::guard_step(k, run_step, k);
    });
    detail::guard_step(lo, combine, lo, hi, results);
    lo = hi;
  }
  return trace;
}

}  // namespace incpar::exec
