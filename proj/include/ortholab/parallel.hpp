#ifndef ORTHOLAB_PARALLEL_HPP
#define ORTHOLAB_PARALLEL_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace ortholab::parallel {

// Worker count: ORTHOLAB_THREADS if set (clamped to >= 1), otherwise the
// hardware concurrency capped at 8.
int worker_count();

// out[i] = fn(i) for i in [0, n), evaluated on contiguous chunks across
// workers.  The fill pattern is index-deterministic, so downstream
// reductions see the same buffer regardless of thread count.
void parallel_fill(std::size_t n, std::complex<double>* out,
                   const std::function<std::complex<double>(std::size_t)>& fn);

// Pairwise (fixed-tree) summation; deterministic for a given buffer.
std::complex<double> pairwise_sum(const std::complex<double>* v, std::size_t n);
double pairwise_sum(const double* v, std::size_t n);

} // namespace ortholab::parallel

#endif
