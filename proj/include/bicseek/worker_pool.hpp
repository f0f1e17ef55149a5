#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bicseek {

/// Fixed-size pool of worker threads for data-parallel loops.
///
/// run() splits [0, n) into chunks handed out through an atomic counter; the
/// calling thread participates, so a pool of size 1 spawns no threads and
/// executes entirely on the caller. Work items must only make writes that are
/// disjoint per item (or commutative, like integer counters), which keeps the
/// result independent of how chunks land on threads.
class WorkerPool {
 public:
  /// threads == 0 selects std::thread::hardware_concurrency().
  explicit WorkerPool(unsigned threads = 0);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  unsigned size() const { return static_cast<unsigned>(workers_.size()) + 1; }

  /// Runs fn(begin, end) over chunks covering [0, n). Blocks until done.
  /// Not reentrant; a pool serves one loop at a time.
  void run(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

 private:
  void drain();
  void worker_loop(std::stop_token st);

  std::vector<std::jthread> workers_;
  std::mutex mu_;
  std::condition_variable_any cv_;
  std::condition_variable done_cv_;
  const std::function<void(std::size_t, std::size_t)>* job_ = nullptr;
  std::size_t n_items_ = 0;
  std::size_t chunk_ = 1;
  std::uint64_t epoch_ = 0;
  std::size_t pending_ = 0;
  std::atomic<std::size_t> next_{0};
};

}  // namespace bicseek
