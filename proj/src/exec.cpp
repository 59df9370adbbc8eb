#include "incpar/exec.hpp"

#include <algorithm>
#include <cstdlib>

namespace incpar::exec {

namespace {
thread_local unsigned t_worker_index = 0;
}

unsigned ThreadPool::current_worker() { return t_worker_index; }

unsigned ThreadPool::default_threads() {
  if (const char* env = std::getenv("INCPAR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

ThreadPool::ThreadPool(unsigned threads)
    : threads_(threads ? threads : default_threads()) {
  workers_.reserve(threads_ - 1);
  for (unsigned i = 1; i < threads_; ++i)
    workers_.emplace_back([this, i] { worker_loop(i); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(m_);
    stop_ = true;
  }
  cv_work_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::run_chunks() {
  const auto& body = *body_;
  for (;;) {
    const std::size_t lo = cursor_.fetch_add(job_grain_, std::memory_order_relaxed);
    if (lo >= job_end_) break;
    const std::size_t hi = std::min(job_end_, lo + job_grain_);
    try {
      body(lo, hi);
    } catch (...) {
      std::lock_guard<std::mutex> lock(m_);
      if (!error_ || lo < error_block_) {
        error_ = std::current_exception();
        error_block_ = lo;
      }
    }
    items_done_.fetch_add(hi - lo, std::memory_order_acq_rel);
  }
}

void ThreadPool::worker_loop(unsigned index) {
  t_worker_index = index;
  std::uint64_t seen = 0;
  for (;;) {
    {
      std::unique_lock<std::mutex> lock(m_);
      cv_work_.wait(lock, [&] { return stop_ || (job_id_ != seen && body_ != nullptr); });
      if (stop_) return;
      seen = job_id_;
      active_ += 1;
    }
    run_chunks();
    {
      std::lock_guard<std::mutex> lock(m_);
      active_ -= 1;
    }
    cv_done_.notify_all();
  }
}

void ThreadPool::parallel_for(std::size_t begin, std::size_t end, std::size_t grain,
                              const std::function<void(std::size_t, std::size_t)>& body) {
  if (begin >= end) return;
  if (grain == 0) grain = 1;
  if (threads_ == 1 || end - begin <= grain) {
    body(begin, end);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(m_);
    body_ = &body;
    job_end_ = end;
    job_grain_ = grain;
    cursor_.store(begin, std::memory_order_relaxed);
    items_done_.store(begin, std::memory_order_relaxed);
    job_total_ = end;
    error_ = nullptr;
    job_id_ += 1;
  }
  cv_work_.notify_all();
  run_chunks();
  {
    std::unique_lock<std::mutex> lock(m_);
    cv_done_.wait(lock, [&] {
      return items_done_.load(std::memory_order_acquire) == job_total_ && active_ == 0;
    });
    body_ = nullptr;
    if (error_) {
      auto err = error_;
      error_ = nullptr;
      std::rethrow_exception(err);
    }
  }
}

}  // namespace incpar::exec
