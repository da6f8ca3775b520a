#pragma once

#include <span>
#include <vector>

#include "hodge/form_field.hpp"

namespace hodge {

// Physical samples of a form on the uniform grid: component c occupies
// [c * size, (c + 1) * size) in row-major sample order.
struct PhysicalField {
  GridPtr grid;
  int degree = 0;
  std::vector<double> values;

  [[nodiscard]] int components() const;
  [[nodiscard]] std::span<double> component(int c);
  [[nodiscard]] std::span<const double> component(int c) const;
};

// Coordinates of sample `index` on [0, 2pi)^n (unused axes zero).
[[nodiscard]] std::array<double, 3> sample_point(const SpectralGrid& grid, std::size_t index);

// IntegrityError when the coefficients are not Hermitian to 1e-10 relative.
[[nodiscard]] PhysicalField to_physical(const FormField& u);
// Forward transform; the result is symmetrised and Nyquist slots cleared.
[[nodiscard]] FormField from_physical(const PhysicalField& f);

// Raw per-component transforms (no symmetry checks).
void inverse_transform(std::span<const cplx> coeffs, std::span<double> out, const SpectralGrid& grid);
void forward_transform(std::span<const double> values, std::span<cplx> out, const SpectralGrid& grid);

}  // namespace hodge
