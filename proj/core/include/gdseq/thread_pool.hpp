#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gdseq {

/// Resolves a requested thread count; 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Fixed-size pool for blocking parallel loops. The calling thread takes
/// part in every loop, so a pool of size 1 spawns no workers.
class ThreadPool {
public:
    explicit ThreadPool(unsigned threads);
    ~ThreadPool();
    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned size() const { return static_cast<unsigned>(workers_.size()) + 1; }

    /// Calls body(lo, hi) on disjoint chunks covering [begin, end) and
    /// returns once all chunks are done. The first exception is rethrown.
    void parallel_for(std::int64_t begin, std::int64_t end,
                      const std::function<void(std::int64_t, std::int64_t)>& body);

private:
    void worker_loop();
    void run_chunks();

    std::vector<std::thread> workers_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const std::function<void(std::int64_t, std::int64_t)>* body_ = nullptr;
    std::int64_t begin_ = 0;
    std::int64_t end_ = 0;
    std::int64_t chunk_ = 1;
    std::int64_t next_ = 0;
    std::uint64_t generation_ = 0;
    unsigned active_ = 0;
    bool stopping_ = false;
    std::exception_ptr error_;
};

}  // namespace gdseq
