#include "gdseq/thread_pool.hpp"

#include <algorithm>

namespace gdseq {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ThreadPool::ThreadPool(unsigned threads) {
    const unsigned n = resolve_threads(threads);
    workers_.reserve(n - 1);
    for (unsigned i = 1; i < n; ++i) {
        workers_.emplace_back([this] { worker_loop(); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    wake_.notify_all();
    for (auto& w : workers_) {
        w.join();
    }
}

void ThreadPool::run_chunks() {
    for (;;) {
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        {
            std::lock_guard lock(mutex_);
            if (next_ >= end_ || error_) {
                return;
            }
            lo = next_;
            hi = std::min(end_, lo + chunk_);
            next_ = hi;
        }
        try {
            (*body_)(lo, hi);
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_) {
                error_ = std::current_exception();
            }
        }
    }
}

void ThreadPool::worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
        {
            std::unique_lock lock(mutex_);
            wake_.wait(lock, [&] { return stopping_ || generation_ != seen; });
            if (stopping_) {
                return;
            }
            seen = generation_;
            ++active_;
        }
        run_chunks();
        {
            std::lock_guard lock(mutex_);
            --active_;
        }
        done_.notify_all();
    }
}

void ThreadPool::parallel_for(std::int64_t begin, std::int64_t end,
                              const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (end <= begin) {
        return;
    }
    if (workers_.empty() || end - begin == 1) {
        body(begin, end);
        return;
    }
    {
        std::lock_guard lock(mutex_);
        body_ = &body;
        begin_ = begin;
        end_ = end;
        next_ = begin;
        chunk_ = std::max<std::int64_t>(1, (end - begin) / (static_cast<std::int64_t>(size()) * 4));
        error_ = nullptr;
        ++generation_;
    }
    wake_.notify_all();
    run_chunks();
    std::exception_ptr error;
    {
        std::unique_lock lock(mutex_);
        done_.wait(lock, [&] { return active_ == 0 && (next_ >= end_ || error_); });
        body_ = nullptr;
        error = error_;
        error_ = nullptr;
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace gdseq
