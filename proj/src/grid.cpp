#include "hodge/grid.hpp"

#include <cmath>
#include <numbers>

#include "hodge/errors.hpp"

namespace hodge {

SpectralGrid::SpectralGrid(int dim, int res) : dim_(dim), res_(res) {
  if (dim < 2 || dim > 3) throw ParameterError("SpectralGrid: dimension must be 2 or 3");
  if (res < 4 || res % 2 != 0) throw ParameterError("SpectralGrid: resolution must be even and >= 4");
  size_ = 1;
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(res);

  for (int a = 0; a < 3; ++a) kvec_[a].assign(size_, 0);
  ksq_.resize(size_);
  mirror_.resize(size_);
  retained_.resize(size_);
  nyquist_.resize(size_);

  const int cutoff = res / 3;
  for (std::size_t q = 0; q < size_; ++q) {
    std::size_t rem = q;
    std::size_t mirror = 0;
    std::size_t stride = 1;
    bool keep = true;
    bool nyq = false;
    double ksq = 0.0;
    for (int a = dim - 1; a >= 0; --a) {
      const int slot = static_cast<int>(rem % res);
      rem /= res;
      const int k = wavenumber(slot);
      kvec_[a][q] = k;
      ksq += static_cast<double>(k) * k;
      keep = keep && std::abs(k) <= cutoff;
      nyq = nyq || slot == res / 2;
      mirror += static_cast<std::size_t>((res - slot) % res) * stride;
      stride *= res;
    }
    ksq_[q] = ksq;
    mirror_[q] = mirror;
    retained_[q] = keep ? 1 : 0;
    nyquist_[q] = nyq ? 1 : 0;
  }
}

double SpectralGrid::spacing() const { return 2.0 * std::numbers::pi / res_; }

std::size_t SpectralGrid::slot_of(int k) const {
  if (k < -res_ / 2 || k >= res_ / 2) throw ParameterError("SpectralGrid: wavenumber outside grid");
  return static_cast<std::size_t>(k >= 0 ? k : k + res_);
}

std::array<int, 3> SpectralGrid::wavevector(std::size_t mode) const {
  return {kvec_[0][mode], kvec_[1][mode], kvec_[2][mode]};
}

std::size_t SpectralGrid::index_of(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dim_) throw UsageError("SpectralGrid::index_of: wrong dimension");
  std::size_t q = 0;
  for (int a = 0; a < dim_; ++a) q = q * res_ + slot_of(k[a]);
  return q;
}

std::size_t SpectralGrid::retained_count() const {
  std::size_t n = 0;
  for (auto r : retained_) n += r;
  return n;
}

}  // namespace hodge
