#include "tropibound/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace tropibound {

namespace {

int threads_from_env()
{
    const char* env = std::getenv("TROPIBOUND_THREADS");
    if (env == nullptr) {
        return 0;
    }
    try {
        return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
        return 0;
    }
}

std::atomic<int>& configured()
{
    static std::atomic<int> value{threads_from_env()};
    return value;
}

}  // namespace

int thread_count()
{
    const int t = configured().load();
    return t > 0 ? t : omp_get_max_threads();
}

void set_thread_count(int threads)
{
    configured().store(std::max(0, threads));
}

}  // namespace tropibound
