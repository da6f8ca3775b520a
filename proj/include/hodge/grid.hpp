#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hodge {

// Uniform periodic grid on T^n = [0, 2pi)^n with the same even resolution per
// axis. Modes are stored in FFT order, row-major with axis 0 slowest, so the
// flat mode index and the flat physical sample index share one layout.
class SpectralGrid {
 public:
  SpectralGrid(int dim, int res);

  static std::shared_ptr<const SpectralGrid> make(int dim, int res) {
    return std::make_shared<const SpectralGrid>(dim, res);
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int res() const { return res_; }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] double spacing() const;

  // Signed wavenumber of a 1-D FFT slot.
  [[nodiscard]] int wavenumber(int slot) const { return slot < res_ / 2 ? slot : slot - res_; }
  [[nodiscard]] std::size_t slot_of(int wavenumber) const;

  [[nodiscard]] int k(std::size_t mode, int axis) const { return kvec_[axis][mode]; }
  [[nodiscard]] std::array<int, 3> wavevector(std::size_t mode) const;
  [[nodiscard]] std::span<const int> axis_wavenumbers(int axis) const { return kvec_[axis]; }
  [[nodiscard]] std::span<const double> k_squared() const { return ksq_; }
  [[nodiscard]] double k_squared(std::size_t mode) const { return ksq_[mode]; }

  [[nodiscard]] std::size_t mirror(std::size_t mode) const { return mirror_[mode]; }
  [[nodiscard]] std::size_t index_of(std::span<const int> wavevector) const;
  [[nodiscard]] static constexpr std::size_t zero_mode() { return 0; }

  // Two-thirds rule: a mode is retained iff every |k_j| <= res/3.
  [[nodiscard]] bool retained(std::size_t mode) const { return retained_[mode] != 0; }
  // Any component equal to -res/2 (the unpaired Nyquist slot).
  [[nodiscard]] bool nyquist(std::size_t mode) const { return nyquist_[mode] != 0; }
  [[nodiscard]] int dealias_cutoff() const { return res_ / 3; }
  [[nodiscard]] std::size_t retained_count() const;

  [[nodiscard]] bool operator==(const SpectralGrid& other) const {
    return dim_ == other.dim_ && res_ == other.res_;
  }

 private:
  int dim_;
  int res_;
  std::size_t size_;
  std::array<std::vector<int>, 3> kvec_;
  std::vector<double> ksq_;
  std::vector<std::size_t> mirror_;
  std::vector<std::uint8_t> retained_;
  std::vector<std::uint8_t> nyquist_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

}  // namespace hodge
