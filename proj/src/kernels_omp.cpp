#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "hodge/kernels.hpp"

namespace hodge::kernels {

namespace {

// Chunked reduction: chunk partials in parallel, combined in chunk order.
template <class ChunkSum>
double chunked_sum(std::size_t n, ChunkSum&& chunk_sum) {
  const std::size_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
  if (chunks <= 1) return n == 0 ? 0.0 : chunk_sum(0, n);
  std::vector<double> partial(chunks, 0.0);
  const auto nchunks = static_cast<long long>(chunks);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < nchunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
    partial[c] = chunk_sum(lo, std::min(n, lo + kReductionChunk));
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

}  // namespace

namespace parallel {

void scale_modes(std::span<cplx> data, std::span<const double> mult) {
  const auto n = static_cast<long long>(data.size());
#pragma omp parallel for schedule(static)
  for (long long q = 0; q < n; ++q) data[q] *= mult[q];
}

void add_derivative(std::span<cplx> out, std::span<const cplx> in, std::span<const int> k, double sign,
                    bool adjoint) {
  const double s = adjoint ? -sign : sign;
  const auto n = static_cast<long long>(out.size());
#pragma omp parallel for schedule(static)
  for (long long q = 0; q < n; ++q) {
    const double kq = s * k[q];
    out[q] += cplx(-kq * in[q].imag(), kq * in[q].real());
  }
}

double real_dot(std::span<const cplx> a, std::span<const cplx> b) {
  return chunked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t q = lo; q < hi; ++q) s += a[q].real() * b[q].real() + a[q].imag() * b[q].imag();
    return s;
  });
}

double weighted_norm2(std::span<const cplx> a, std::span<const double> w) {
  return chunked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t q = lo; q < hi; ++q) s += w[q] * std::norm(a[q]);
    return s;
  });
}

void contract(std::span<const TensorEntry> tensor, std::span<const double> a, std::span<const double> b,
              std::span<double> out, std::size_t points) {
  // Blocks of points, tensor entries inside: each point still sees the
  // entries in tensor order (bitwise equal to the serial sum), and the inner
  // loop is contiguous.
  constexpr std::size_t kBlock = 1024;
  const auto blocks = static_cast<long long>((points + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(static)
  for (long long blk = 0; blk < blocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
    const std::size_t hi = std::min(points, lo + kBlock);
    for (const auto& t : tensor) {
      const double* pa = a.data() + t.i * points;
      const double* pb = b.data() + t.j * points;
      double* po = out.data() + t.c * points;
      for (std::size_t x = lo; x < hi; ++x) po[x] += t.value * pa[x] * pb[x];
    }
  }
}

double fibre_power_sum(std::span<const double> u, int ncomp, std::size_t points, double p) {
  return chunked_sum(points, [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t x = lo; x < hi; ++x) {
      double r2 = 0.0;
      for (int c = 0; c < ncomp; ++c) r2 += u[c * points + x] * u[c * points + x];
      s += std::pow(r2, 0.5 * p);
    }
    return s;
  });
}

double fibre_max(std::span<const double> u, int ncomp, std::size_t points) {
  const auto n = static_cast<long long>(points);
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
  for (long long x = 0; x < n; ++x) {
    double r2 = 0.0;
    for (int c = 0; c < ncomp; ++c) r2 += u[c * points + x] * u[c * points + x];
    m = std::max(m, r2);
  }
  return std::sqrt(m);
}

}  // namespace parallel

int configure_threads() {
  if (const char* env = std::getenv("HODGE_NUM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
  return omp_get_max_threads();
}

}  // namespace hodge::kernels
