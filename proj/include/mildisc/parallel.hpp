#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace mildisc {

/// Runs fn(i) for i in [0, count) on the OpenMP team. Exceptions cannot
/// cross the parallel region, so each is parked and the one from the lowest
/// index is rethrown afterwards; the outcome matches a serial loop.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) if (count > 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

/// Number of threads an OpenMP region would use (1 without OpenMP).
int max_threads() noexcept;
/// Caps the OpenMP team size; values < 1 are ignored.
void set_threads(int threads) noexcept;

} // namespace mildisc
