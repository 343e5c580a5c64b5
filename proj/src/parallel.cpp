#include "ortholab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace ortholab::parallel {

int worker_count() {
    if (const char* env = std::getenv("ORTHOLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

void parallel_fill(std::size_t n, std::complex<double>* out,
                   const std::function<std::complex<double>(std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n / 256, 1));
    if (workers <= 1 || n < 512) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

namespace {
template <typename T>
T pairwise_impl(const T* v, std::size_t n) {
    if (n == 0) return T{};
    if (n <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_impl(v, half) + pairwise_impl(v + half, n - half);
}
} // namespace

std::complex<double> pairwise_sum(const std::complex<double>* v, std::size_t n) {
    return pairwise_impl(v, n);
}

double pairwise_sum(const double* v, std::size_t n) { return pairwise_impl(v, n); }

} // namespace ortholab::parallel
