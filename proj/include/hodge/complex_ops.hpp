#pragma once

#include <optional>

#include "hodge/form_field.hpp"

namespace hodge {

// Operators of the de Rham complex on the flat torus, all exact Fourier
// multipliers. d is built from the incidence table of the wedge product and
// the codifferential is its literal L^2 adjoint over the same table.

// d: degree i -> i+1. DomainError for i = n.
[[nodiscard]] FormField exterior_derivative(const FormField& u);
// d^*: degree i -> i-1. DomainError for i = 0.
[[nodiscard]] FormField codifferential(const FormField& u);

// Hodge Laplacian as the multiplier |k|^2 on every component.
[[nodiscard]] FormField hodge_laplacian(const FormField& u);
// Hodge Laplacian as d^* d + d d^*, with the missing terms at i = 0 and i = n
// treated as zero.
[[nodiscard]] FormField hodge_laplacian_composed(const FormField& u);

// Orthogonal projection onto harmonic forms (the constant forms): keeps k = 0.
[[nodiscard]] FormField harmonic_projection(const FormField& u);
// 1/|k|^2 off the zero mode, 0 on it.
[[nodiscard]] FormField parametrix(const FormField& u);
// (Delta)^{s/2}: |k|^s off the zero mode, 0 on it. DomainError for s < 0.
[[nodiscard]] FormField fractional_power(const FormField& u, double s);

// Higher-order operator built from the complex: Delta^{m/2} for even m and
// (d + d^*) Delta^{(m-1)/2} for odd m. In the odd case the parts that do not
// exist at the ends of the complex (d at top degree, d^* at degree 0) are
// absent rather than zero fields of a fake degree.
struct TildeNabla {
  std::optional<FormField> even;
  std::optional<FormField> exact;    // d Delta^{(m-1)/2} u
  std::optional<FormField> coexact;  // d^* Delta^{(m-1)/2} u
};
[[nodiscard]] TildeNabla tilde_nabla(const FormField& u, int m);

// Abstract elliptic complex. Only the flat-torus de Rham backend exists; the
// Hodge operators are written against this interface.
class EllipticComplex {
 public:
  virtual ~EllipticComplex() = default;
  [[nodiscard]] virtual int top_degree() const = 0;
  [[nodiscard]] virtual FormField apply_A(const FormField& u) const = 0;
  [[nodiscard]] virtual FormField apply_A_adjoint(const FormField& u) const = 0;
  [[nodiscard]] virtual FormField laplacian(const FormField& u) const = 0;
  [[nodiscard]] virtual FormField harmonic(const FormField& u) const = 0;
  [[nodiscard]] virtual FormField parametrix(const FormField& u) const = 0;
};

class TorusDeRham final : public EllipticComplex {
 public:
  explicit TorusDeRham(int dim) : dim_(dim) {}
  [[nodiscard]] int top_degree() const override { return dim_; }
  [[nodiscard]] FormField apply_A(const FormField& u) const override { return exterior_derivative(u); }
  [[nodiscard]] FormField apply_A_adjoint(const FormField& u) const override { return codifferential(u); }
  [[nodiscard]] FormField laplacian(const FormField& u) const override { return hodge_laplacian(u); }
  [[nodiscard]] FormField harmonic(const FormField& u) const override { return harmonic_projection(u); }
  [[nodiscard]] FormField parametrix(const FormField& u) const override { return hodge::parametrix(u); }

 private:
  int dim_;
};

}  // namespace hodge
