#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pbmo {

template <class Fn>
void for_each_chunk(std::uint64_t total, unsigned workers, Fn&& fn) {
    workers = std::max(1U, workers);
    if (total < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
    const std::uint64_t step = (total + workers - 1) / workers;
    if (workers == 1) {
        fn(std::uint64_t{0}, total, 0U);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned c = 0; c < workers; ++c) {
        const std::uint64_t begin = std::min(total, c * step);
        const std::uint64_t end = std::min(total, begin + step);
        pool.emplace_back([&, begin, end, c] {
            try {
                fn(begin, end, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace pbmo
