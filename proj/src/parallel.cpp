#include "traceconst/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace traceconst {

int worker_thread_count() {
    int count = static_cast<int>(std::thread::hardware_concurrency());
    if (count < 1) count = 1;
    if (const char* cap = std::getenv("TRACECONST_THREADS")) {
        try {
            const int requested = std::stoi(cap);
            if (requested >= 1) count = std::min(count, requested);
        } catch (...) {
            // ignore unparsable values, keep the hardware default
        }
    }
    return count;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_thread_count()), n);
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace traceconst
