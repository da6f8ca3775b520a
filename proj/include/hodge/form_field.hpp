#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "hodge/grid.hpp"

namespace hodge {

using cplx = std::complex<double>;

// A real degree-k differential form on T^n held as Fourier coefficients,
//   u_I(x) = sum_k c_I(k) exp(i k.x),
// one coefficient array per increasing multi-index I. Coefficients are kept
// Hermitian (c(-k) = conj c(k)) and zero on Nyquist slots.
class FormField {
 public:
  FormField(GridPtr grid, int degree);

  static FormField zeros(GridPtr grid, int degree) { return FormField(std::move(grid), degree); }

  [[nodiscard]] const GridPtr& grid_ptr() const { return grid_; }
  [[nodiscard]] const SpectralGrid& grid() const { return *grid_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int components() const { return ncomp_; }

  [[nodiscard]] std::span<cplx> component(int c);
  [[nodiscard]] std::span<const cplx> component(int c) const;
  [[nodiscard]] std::span<cplx> data() { return coeffs_; }
  [[nodiscard]] std::span<const cplx> data() const { return coeffs_; }

  [[nodiscard]] cplx& at(int c, std::size_t mode) { return coeffs_[c * grid_->size() + mode]; }
  [[nodiscard]] const cplx& at(int c, std::size_t mode) const { return coeffs_[c * grid_->size() + mode]; }

  [[nodiscard]] std::optional<double> time() const { return time_; }
  void set_time(std::optional<double> t) { time_ = t; }

  // Sets c(k) and its mirror so the field stays real.
  void set_mode(int c, std::size_t mode, cplx value);

  [[nodiscard]] bool same_space(const FormField& other) const;
  void require_same_space(const FormField& other, const char* what) const;

  FormField& operator+=(const FormField& other);
  FormField& operator-=(const FormField& other);
  FormField& operator*=(double s);
  // this += s * other
  FormField& axpy(double s, const FormField& other);

  [[nodiscard]] double max_abs() const;
  // Largest deviation from Hermitian symmetry plus any Nyquist content.
  [[nodiscard]] double hermitian_defect() const;
  // Replaces coefficients by the Hermitian part and clears Nyquist slots.
  void symmetrize();

 private:
  GridPtr grid_;
  int degree_;
  int ncomp_;
  std::vector<cplx> coeffs_;
  std::optional<double> time_;
};

[[nodiscard]] FormField operator+(FormField a, const FormField& b);
[[nodiscard]] FormField operator-(FormField a, const FormField& b);
[[nodiscard]] FormField operator*(double s, FormField a);

// L^2 inner product with the unit-normalised measure dx / (2pi)^n, by Parseval.
[[nodiscard]] double inner_product(const FormField& u, const FormField& v);
[[nodiscard]] double l2_norm(const FormField& u);

// Zero outside the two-thirds dealiasing mask.
void apply_dealias(FormField& u);

}  // namespace hodge
