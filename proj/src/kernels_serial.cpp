#include <algorithm>
#include <cmath>

#include "hodge/kernels.hpp"

namespace hodge::kernels::serial {

void scale_modes(std::span<cplx> data, std::span<const double> mult) {
  for (std::size_t q = 0; q < data.size(); ++q) data[q] *= mult[q];
}

void add_derivative(std::span<cplx> out, std::span<const cplx> in, std::span<const int> k, double sign,
                    bool adjoint) {
  const double s = adjoint ? -sign : sign;
  for (std::size_t q = 0; q < out.size(); ++q) {
    const double kq = s * k[q];
    // (i kq) * z = (-kq Im z, kq Re z)
    out[q] += cplx(-kq * in[q].imag(), kq * in[q].real());
  }
}

double real_dot(std::span<const cplx> a, std::span<const cplx> b) {
  double s = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) s += a[q].real() * b[q].real() + a[q].imag() * b[q].imag();
  return s;
}

double weighted_norm2(std::span<const cplx> a, std::span<const double> w) {
  double s = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) s += w[q] * std::norm(a[q]);
  return s;
}

void contract(std::span<const TensorEntry> tensor, std::span<const double> a, std::span<const double> b,
              std::span<double> out, std::size_t points) {
  for (const auto& t : tensor) {
    const double* pa = a.data() + t.i * points;
    const double* pb = b.data() + t.j * points;
    double* po = out.data() + t.c * points;
    for (std::size_t x = 0; x < points; ++x) po[x] += t.value * pa[x] * pb[x];
  }
}

double fibre_power_sum(std::span<const double> u, int ncomp, std::size_t points, double p) {
  double s = 0.0;
  for (std::size_t x = 0; x < points; ++x) {
    double r2 = 0.0;
    for (int c = 0; c < ncomp; ++c) r2 += u[c * points + x] * u[c * points + x];
    s += std::pow(r2, 0.5 * p);
  }
  return s;
}

double fibre_max(std::span<const double> u, int ncomp, std::size_t points) {
  double m = 0.0;
  for (std::size_t x = 0; x < points; ++x) {
    double r2 = 0.0;
    for (int c = 0; c < ncomp; ++c) r2 += u[c * points + x] * u[c * points + x];
    m = std::max(m, r2);
  }
  return std::sqrt(m);
}

}  // namespace hodge::kernels::serial
