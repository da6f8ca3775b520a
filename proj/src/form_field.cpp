#include "hodge/form_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodge/errors.hpp"
#include "hodge/kernels.hpp"
#include "hodge/multi_index.hpp"

namespace hodge {

FormField::FormField(GridPtr grid, int degree) : grid_(std::move(grid)), degree_(degree) {
  if (!grid_) throw UsageError("FormField: null grid");
  if (degree < 0 || degree > grid_->dim()) throw DomainError("FormField: degree outside [0, n]");
  ncomp_ = binomial(grid_->dim(), degree);
  coeffs_.assign(static_cast<std::size_t>(ncomp_) * grid_->size(), cplx{0.0, 0.0});
}

std::span<cplx> FormField::component(int c) {
  return std::span<cplx>(coeffs_).subspan(c * grid_->size(), grid_->size());
}

std::span<const cplx> FormField::component(int c) const {
  return std::span<const cplx>(coeffs_).subspan(c * grid_->size(), grid_->size());
}

void FormField::set_mode(int c, std::size_t mode, cplx value) {
  const std::size_t m = grid_->mirror(mode);
  if (m == mode) value = {value.real(), 0.0};
  at(c, mode) = value;
  at(c, m) = std::conj(value);
}

bool FormField::same_space(const FormField& other) const {
  return degree_ == other.degree_ && *grid_ == *other.grid_;
}

void FormField::require_same_space(const FormField& other, const char* what) const {
  if (!same_space(other)) {
    throw UsageError(std::string(what) + ": fields differ in degree or grid");
  }
}

FormField& FormField::operator+=(const FormField& other) {
  require_same_space(other, "operator+=");
  for (std::size_t q = 0; q < coeffs_.size(); ++q) coeffs_[q] += other.coeffs_[q];
  return *this;
}

FormField& FormField::operator-=(const FormField& other) {
  require_same_space(other, "operator-=");
  for (std::size_t q = 0; q < coeffs_.size(); ++q) coeffs_[q] -= other.coeffs_[q];
  return *this;
}

FormField& FormField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FormField& FormField::axpy(double s, const FormField& other) {
  require_same_space(other, "axpy");
  for (std::size_t q = 0; q < coeffs_.size(); ++q) coeffs_[q] += s * other.coeffs_[q];
  return *this;
}

double FormField::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double FormField::hermitian_defect() const {
  double defect = 0.0;
  const auto& g = *grid_;
  for (int c = 0; c < ncomp_; ++c) {
    const auto comp = component(c);
    for (std::size_t q = 0; q < g.size(); ++q) {
      if (g.nyquist(q)) {
        defect = std::max(defect, std::abs(comp[q]));
      } else {
        defect = std::max(defect, std::abs(comp[q] - std::conj(comp[g.mirror(q)])));
      }
    }
  }
  return defect;
}

void FormField::symmetrize() {
  const auto& g = *grid_;
  for (int c = 0; c < ncomp_; ++c) {
    auto comp = component(c);
    for (std::size_t q = 0; q < g.size(); ++q) {
      if (g.nyquist(q)) {
        comp[q] = 0.0;
        continue;
      }
      const std::size_t m = g.mirror(q);
      if (m < q) continue;
      const cplx h = 0.5 * (comp[q] + std::conj(comp[m]));
      comp[q] = h;
      comp[m] = std::conj(h);
    }
  }
}

FormField operator+(FormField a, const FormField& b) { return a += b; }
FormField operator-(FormField a, const FormField& b) { return a -= b; }
FormField operator*(double s, FormField a) { return a *= s; }

double inner_product(const FormField& u, const FormField& v) {
  u.require_same_space(v, "inner_product");
  return kernels::parallel::real_dot(u.data(), v.data());
}

double l2_norm(const FormField& u) { return std::sqrt(inner_product(u, u)); }

void apply_dealias(FormField& u) {
  const auto& g = u.grid();
  for (int c = 0; c < u.components(); ++c) {
    auto comp = u.component(c);
    for (std::size_t q = 0; q < g.size(); ++q)
      if (!g.retained(q)) comp[q] = 0.0;
  }
}

}  // namespace hodge
