#include "hodge/hodge_operators.hpp"

#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// d d^* phi u, zero on 0-forms.
FormField exact_part(const FormField& u, const EllipticComplex& cx) {
  if (u.degree() == 0) return FormField(u.grid_ptr(), 0);
  return cx.apply_A(cx.apply_A_adjoint(cx.parametrix(u)));
}

// d^* d phi u, zero on top-degree forms.
FormField coexact_part(const FormField& u, const EllipticComplex& cx) {
  if (u.degree() == cx.top_degree()) return FormField(u.grid_ptr(), u.degree());
  return cx.apply_A_adjoint(cx.apply_A(cx.parametrix(u)));
}

}  // namespace

FormField helmholtz_project(const FormField& u, const EllipticComplex& cx) {
  FormField out = coexact_part(u, cx);
  out += cx.harmonic(u);
  out.set_time(u.time());
  return out;
}

FormField helmholtz_project(const FormField& u) { return helmholtz_project(u, TorusDeRham(u.grid().dim())); }

FormField helmholtz_project_complement(const FormField& u, const EllipticComplex& cx) {
  FormField out = u;
  out -= exact_part(u, cx);
  return out;
}

HodgeDecomposition hodge_decompose(const FormField& u, const EllipticComplex& cx) {
  return {exact_part(u, cx), coexact_part(u, cx), cx.harmonic(u)};
}

HodgeDecomposition hodge_decompose(const FormField& u) { return hodge_decompose(u, TorusDeRham(u.grid().dim())); }

FormField recover_pressure(const FormField& F, const EllipticComplex& cx, double tol) {
  if (F.degree() < 1) throw DomainError("recover_pressure: F must have degree >= 1");
  const FormField PF = helmholtz_project(F, cx);
  const double nF = l2_norm(F);
  const double nPF = l2_norm(PF);
  if (nPF > tol * nF) {
    std::ostringstream msg;
    msg << "recover_pressure: F is not in the range of d (||PF|| / ||F|| = " << nPF / nF << ")";
    throw ConsistencyError(msg.str());
  }
  FormField exact = F;
  exact -= PF;
  FormField p = cx.apply_A_adjoint(cx.parametrix(exact));
  p.set_time(F.time());
  return p;
}

FormField recover_pressure(const FormField& F, double tol) {
  return recover_pressure(F, TorusDeRham(F.grid().dim()), tol);
}

}  // namespace hodge
