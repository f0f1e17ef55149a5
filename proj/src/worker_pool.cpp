#include "bicseek/worker_pool.hpp"

#include <algorithm>

namespace bicseek {

WorkerPool::WorkerPool(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  workers_.reserve(threads - 1);
  for (unsigned i = 0; i + 1 < threads; ++i)
    workers_.emplace_back([this](std::stop_token st) { worker_loop(st); });
}

WorkerPool::~WorkerPool() {
  for (auto& w : workers_) w.request_stop();
  cv_.notify_all();
  // jthread joins on destruction
}

void WorkerPool::run(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (workers_.empty()) {
    fn(0, n);
    return;
  }
  {
    std::lock_guard lk(mu_);
    job_ = &fn;
    n_items_ = n;
    chunk_ = std::max<std::size_t>(1, n / (static_cast<std::size_t>(size()) * 8));
    next_.store(0, std::memory_order_relaxed);
    pending_ = workers_.size();
    ++epoch_;
  }
  cv_.notify_all();
  drain();
  std::unique_lock lk(mu_);
  done_cv_.wait(lk, [this] { return pending_ == 0; });
  job_ = nullptr;
}

void WorkerPool::drain() {
  for (;;) {
    const std::size_t begin = next_.fetch_add(chunk_, std::memory_order_relaxed);
    if (begin >= n_items_) break;
    (*job_)(begin, std::min(n_items_, begin + chunk_));
  }
}

void WorkerPool::worker_loop(std::stop_token st) {
  std::uint64_t seen = 0;
  std::unique_lock lk(mu_);
  for (;;) {
    cv_.wait(lk, st, [&] { return epoch_ != seen; });
    if (st.stop_requested()) return;
    seen = epoch_;
    lk.unlock();
    drain();
    lk.lock();
    if (--pending_ == 0) done_cv_.notify_one();
  }
}

}  // namespace bicseek
