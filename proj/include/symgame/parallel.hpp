#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace symgame::detail {

// Worker cap for internal parallelism. SYMGAME_THREADS, when set to a
// positive integer, caps it (1 disables); otherwise a small default based
// on the hardware. Results never depend on the cap.
inline int thread_cap() {
    if (const char* env = std::getenv("SYMGAME_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(std::min(hw, 4u));
}

// Runs fn(i) for each i in [0, count), possibly across threads. Callers
// write into pre-sized per-index slots to keep results deterministic.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(thread_cap(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        }));
    }
    for (auto& f : futures) f.get();
}

} // namespace symgame::detail
