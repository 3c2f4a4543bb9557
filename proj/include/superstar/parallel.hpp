#ifndef SUPERSTAR_PARALLEL_HPP
#define SUPERSTAR_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace superstar {

// Runs fn(rep_index) for rep_index in [0, reps) across worker threads and
// returns results in rep-index order. Output is independent of the worker
// count as long as fn derives its randomness from the rep index.
template <typename Fn>
auto run_replications(std::int64_t reps, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(std::int64_t{}))> {
    using Result = decltype(fn(std::int64_t{}));
    std::vector<Result> results(static_cast<std::size_t>(reps));
    if (threads <= 1 || reps <= 1) {
        for (std::int64_t r = 0; r < reps; ++r) results[r] = fn(r);
        return results;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t r = next.fetch_add(1);
            if (r >= reps) return;
            results[r] = fn(r);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n_workers = threads < static_cast<unsigned>(reps) ? threads
                                                                     : static_cast<unsigned>(reps);
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

inline unsigned default_thread_count() {
    if (const char* env = std::getenv("SUPERSTAR_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace superstar

#endif
