#pragma once

// Execution policy shared by the data-parallel kernels. Every kernel has a
// serial reference path (Exec::Serial) and an OpenMP path (Exec::Parallel);
// both produce identical, deterministically ordered output.

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <type_traits>
#include <vector>

namespace tropibound {

enum class Exec { Serial, Parallel };

/// Worker count for Exec::Parallel. Reads TROPIBOUND_THREADS on first use;
/// 0 means the OpenMP default.
int thread_count();
void set_thread_count(int threads);

/// Applies f to every index in [0, count) and returns the results in index
/// order. Exceptions thrown by f are rethrown on the calling thread (first
/// one wins).
template <class F>
auto parallel_map(std::size_t count, F&& f, Exec exec) -> std::vector<decltype(f(std::size_t{}))>
{
    using R = decltype(f(std::size_t{}));
    static_assert(!std::is_same_v<R, bool>, "vector<bool> is not safe for concurrent writes");
    std::vector<R> out(count);
    if (exec == Exec::Serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = f(i);
        }
        return out;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const int threads = thread_count();
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads != 1)
    for (long long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

}  // namespace tropibound
