#include "hodge/complex_ops.hpp"

#include <cmath>
#include <vector>

#include "hodge/errors.hpp"
#include "hodge/kernels.hpp"
#include "hodge/multi_index.hpp"

namespace hodge {

namespace {

FormField apply_multiplier(const FormField& u, std::span<const double> mult) {
  FormField out = u;
  for (int c = 0; c < out.components(); ++c) kernels::parallel::scale_modes(out.component(c), mult);
  return out;
}

std::vector<double> power_multiplier(const SpectralGrid& g, double s) {
  std::vector<double> mult(g.size());
  const auto ksq = g.k_squared();
  for (std::size_t q = 0; q < g.size(); ++q) mult[q] = ksq[q] == 0.0 ? 0.0 : std::pow(ksq[q], 0.5 * s);
  return mult;
}

}  // namespace

FormField exterior_derivative(const FormField& u) {
  const auto& g = u.grid();
  if (u.degree() >= g.dim()) throw DomainError("exterior_derivative: d vanishes on top-degree forms");
  FormField out(u.grid_ptr(), u.degree() + 1);
  for (const auto& e : exterior_incidence(g.dim(), u.degree())) {
    kernels::parallel::add_derivative(out.component(e.target), u.component(e.source),
                                      g.axis_wavenumbers(e.axis), e.sign, false);
  }
  out.set_time(u.time());
  return out;
}

FormField codifferential(const FormField& u) {
  const auto& g = u.grid();
  if (u.degree() == 0) throw DomainError("codifferential: no adjoint below degree 0");
  FormField out(u.grid_ptr(), u.degree() - 1);
  // Transpose of the d table with conj(i k) = -i k.
  for (const auto& e : exterior_incidence(g.dim(), u.degree() - 1)) {
    kernels::parallel::add_derivative(out.component(e.source), u.component(e.target),
                                      g.axis_wavenumbers(e.axis), e.sign, true);
  }
  out.set_time(u.time());
  return out;
}

FormField hodge_laplacian(const FormField& u) { return apply_multiplier(u, u.grid().k_squared()); }

FormField hodge_laplacian_composed(const FormField& u) {
  const int n = u.grid().dim();
  FormField out(u.grid_ptr(), u.degree());
  if (u.degree() < n) out += codifferential(exterior_derivative(u));
  if (u.degree() > 0) out += exterior_derivative(codifferential(u));
  out.set_time(u.time());
  return out;
}

FormField harmonic_projection(const FormField& u) {
  FormField out(u.grid_ptr(), u.degree());
  for (int c = 0; c < u.components(); ++c) out.at(c, SpectralGrid::zero_mode()) = u.at(c, SpectralGrid::zero_mode());
  out.set_time(u.time());
  return out;
}

FormField parametrix(const FormField& u) {
  const auto& g = u.grid();
  std::vector<double> mult(g.size());
  const auto ksq = g.k_squared();
  for (std::size_t q = 0; q < g.size(); ++q) mult[q] = ksq[q] == 0.0 ? 0.0 : 1.0 / ksq[q];
  return apply_multiplier(u, mult);
}

FormField fractional_power(const FormField& u, double s) {
  if (!(s >= 0.0)) throw DomainError("fractional_power: order must be nonnegative");
  return apply_multiplier(u, power_multiplier(u.grid(), s));
}

TildeNabla tilde_nabla(const FormField& u, int m) {
  if (m < 1) throw DomainError("tilde_nabla: order must be >= 1");
  TildeNabla out;
  if (m % 2 == 0) {
    out.even = fractional_power(u, m);
    return out;
  }
  const FormField base = fractional_power(u, m - 1);
  if (u.degree() < u.grid().dim()) out.exact = exterior_derivative(base);
  if (u.degree() > 0) out.coexact = codifferential(base);
  return out;
}

}  // namespace hodge
