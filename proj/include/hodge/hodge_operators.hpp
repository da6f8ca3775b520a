#pragma once

#include "hodge/complex_ops.hpp"

namespace hodge {

// u = exact + coexact + harmonic with
//   exact    = d d^* phi u   (image of d from degree i-1)
//   coexact  = d^* d phi u   (image of d^* from degree i+1)
//   harmonic = Pi u
struct HodgeDecomposition {
  FormField exact;
  FormField coexact;
  FormField harmonic;

  [[nodiscard]] FormField reconstruct() const { return exact + coexact + harmonic; }
};

// Projection onto ker d^*: P = d^* d phi + Pi.
[[nodiscard]] FormField helmholtz_project(const FormField& u, const EllipticComplex& cx);
[[nodiscard]] FormField helmholtz_project(const FormField& u);
// The complementary formula P = I - d d^* phi, kept as an independent route.
[[nodiscard]] FormField helmholtz_project_complement(const FormField& u, const EllipticComplex& cx);

[[nodiscard]] HodgeDecomposition hodge_decompose(const FormField& u, const EllipticComplex& cx);
[[nodiscard]] HodgeDecomposition hodge_decompose(const FormField& u);

inline constexpr double kDefaultRangeTolerance = 1e-10;

// Solves d p = F for p with d^* p = 0 and p orthogonal to harmonics, using
// p = d^* phi F. F must lie in the range of d: ||P F|| <= tol ||F||, otherwise
// ConsistencyError. The residual P F is removed before solving.
[[nodiscard]] FormField recover_pressure(const FormField& F, const EllipticComplex& cx,
                                         double tol = kDefaultRangeTolerance);
[[nodiscard]] FormField recover_pressure(const FormField& F, double tol = kDefaultRangeTolerance);

}  // namespace hodge
