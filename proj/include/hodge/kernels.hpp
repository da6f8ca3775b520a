#pragma once

// Data-parallel inner loops used by the spectral operators. Every kernel has a
// serial reference in kernels::serial and an OpenMP version in
// kernels::parallel with the same signature. Elementwise kernels agree
// bitwise; reductions sum fixed-size chunks in a fixed order, so the parallel
// result does not depend on the thread count.

#include <complex>
#include <cstddef>
#include <span>

namespace hodge::kernels {

using cplx = std::complex<double>;

// Sparse entry of a constant fibre-wise bilinear map: out[c] += value * a[i] * b[j].
struct TensorEntry {
  int i;
  int j;
  int c;
  double value;
};

inline constexpr std::size_t kReductionChunk = 4096;

namespace serial {

// data[q] *= mult[q]
void scale_modes(std::span<cplx> data, std::span<const double> mult);
// out[q] += sign * (i k[q]) * in[q], or with (-i k[q]) when adjoint is set.
void add_derivative(std::span<cplx> out, std::span<const cplx> in, std::span<const int> k,
                    double sign, bool adjoint);
// sum_q Re(conj(a[q]) b[q])
double real_dot(std::span<const cplx> a, std::span<const cplx> b);
// sum_q w[q] |a[q]|^2
double weighted_norm2(std::span<const cplx> a, std::span<const double> w);
// Pointwise contraction over `points` samples; component c of a field lives
// at [c * points, (c + 1) * points).
void contract(std::span<const TensorEntry> tensor, std::span<const double> a,
              std::span<const double> b, std::span<double> out, std::size_t points);
// sum_x |u(x)|^p with the Euclidean fibre norm over `ncomp` components.
double fibre_power_sum(std::span<const double> u, int ncomp, std::size_t points, double p);
double fibre_max(std::span<const double> u, int ncomp, std::size_t points);

}  // namespace serial

namespace parallel {

void scale_modes(std::span<cplx> data, std::span<const double> mult);
void add_derivative(std::span<cplx> out, std::span<const cplx> in, std::span<const int> k,
                    double sign, bool adjoint);
double real_dot(std::span<const cplx> a, std::span<const cplx> b);
double weighted_norm2(std::span<const cplx> a, std::span<const double> w);
void contract(std::span<const TensorEntry> tensor, std::span<const double> a,
              std::span<const double> b, std::span<double> out, std::size_t points);
double fibre_power_sum(std::span<const double> u, int ncomp, std::size_t points, double p);
double fibre_max(std::span<const double> u, int ncomp, std::size_t points);

}  // namespace parallel

// Number of OpenMP threads, honouring HODGE_NUM_THREADS when set.
int configure_threads();

}  // namespace hodge::kernels
