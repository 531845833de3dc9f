#include "wright/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace wright {

unsigned parallel_width()
{
    if (const char* env = std::getenv("WRIGHT_THREADS")) {
        unsigned v = 0;
        const char* end = env + std::strlen(env);
        const auto r = std::from_chars(env, end, v);
        if (r.ec == std::errc() && r.ptr == end && v > 0) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const std::size_t width = std::min<std::size_t>(parallel_width(), n);
    std::vector<std::exception_ptr> errors(n);
    const auto run = [&](std::size_t i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (width <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            run(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        workers.reserve(width);
        for (std::size_t w = 0; w < width; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    run(i);
                }
            });
        }
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace wright
