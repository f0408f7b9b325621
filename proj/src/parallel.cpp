#include "entmono/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace entmono {

int thread_budget() {
    if (const char* env = std::getenv("ENTMONO_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_chunks(std::uint64_t count,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body) {
    if (count == 0) return;
    std::uint64_t workers = std::min<std::uint64_t>(thread_budget(), count);
    if (workers <= 1) {
        body(0, count);
        return;
    }

    std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace entmono
