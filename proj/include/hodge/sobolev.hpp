#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hodge/form_field.hpp"

namespace hodge {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Order s >= 0 and integrability p in (1, inf].
struct SobolevIndex {
  double s = 0.0;
  double p = 2.0;
};

// ||u||_{L^p} with the unit-normalised measure, by quadrature over the grid
// samples (max over samples for p = inf). Pointwise norm is the Euclidean
// norm of the component vector.
[[nodiscard]] double lp_norm(const FormField& u, double p);

// Derivative of order sigma inside the norms: the identity for sigma = 0 and
// Delta^{sigma/2} (which annihilates harmonics) for sigma > 0.
[[nodiscard]] FormField derivative_power(const FormField& u, double sigma);
// ||derivative_power(u, sigma)||_{L^2}^2 evaluated by Parseval.
[[nodiscard]] double derivative_power_norm2(const FormField& u, double sigma);

// (||Delta^{s/2} u||_p^p + ||Pi u||_p^p)^{1/p}; max of the two for p = inf.
// DomainError for p <= 1 or s < 0.
[[nodiscard]] double nabla_norm(const FormField& u, SobolevIndex idx);
// Same norm at p = 2 by Parseval over the coefficients.
[[nodiscard]] double nabla_norm_spectral(const FormField& u, double s);

// Norm built from (d + d^*) and even powers of the Laplacian: for even m
// (||Delta^{m/2} u||_p^p + ||Pi u||_p^p)^{1/p}, for odd m the d and d^* parts
// of Delta^{(m-1)/2} u enter separately.
[[nodiscard]] double tilde_norm(const FormField& u, int m, double p);

// ---- Gagliardo-Nirenberg interpolation -------------------------------------

// || grad^{j0} v ||_{p0} <= C ( (|| grad^{m0} v ||_{r0} + ||v||_2)^a ||v||_{q0}^{1-a} + ||v||_2 )
// with 1/p0 = j0/n + a (1/r0 - m0/n) + (1 - a)/q0 and j0/m0 <= a <= 1.
struct GagliardoNirenbergIndices {
  int j0 = 0;
  int m0 = 1;
  double p0 = 2.0;
  double q0 = 2.0;
  double r0 = 2.0;
};

struct GagliardoNirenbergReport {
  double a = 0.0;
  double lhs = 0.0;
  double rhs_factor = 0.0;
  double ratio = 0.0;
  bool admissible = false;
};

// Solves the index relation for a and validates the admissible range,
// including the exceptional case (a < 1 when 1 < r0 < inf and m0 - j0 - n/r0
// is a nonnegative integer). ParameterError when no admissible a exists.
[[nodiscard]] double interpolation_exponent(int dim, const GagliardoNirenbergIndices& idx);

[[nodiscard]] GagliardoNirenbergReport gagliardo_nirenberg_check(const FormField& v,
                                                                  const GagliardoNirenbergIndices& idx);

struct GagliardoNirenbergSurvey {
  int samples = 0;
  double a = 0.0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
};

// Ratio statistics over `count` random band-limited fields drawn from `seed`.
[[nodiscard]] GagliardoNirenbergSurvey gagliardo_nirenberg_survey(const GridPtr& grid, int degree,
                                                                   const GagliardoNirenbergIndices& idx,
                                                                   int count, int band, std::uint64_t seed);

// ---- Gronwall envelope -------------------------------------------------------

struct GronwallReport {
  bool hypotheses_hold = false;  // A nondecreasing and B >= 0
  std::string violation;
  std::vector<bool> integral_inequality;  // Y <= A + int B Y (trapezoid)
  std::vector<bool> envelope;             // Y <= A exp(int B)
  std::vector<double> bound;              // A exp(int B)

  [[nodiscard]] bool envelope_holds() const;
};

// Discrete check of the Gronwall implication on a common time grid; relative
// tolerance applies to both inequalities. The conclusion is not evaluated
// when the hypotheses on A or B fail.
[[nodiscard]] GronwallReport gronwall_envelope(const std::vector<double>& times, const std::vector<double>& A,
                                               const std::vector<double>& B, const std::vector<double>& Y,
                                               double rel_tol = 1e-9);

// Composite trapezoid rule.
[[nodiscard]] double trapezoid(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace hodge
