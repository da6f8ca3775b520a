#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hodge/form_field.hpp"

namespace hodge {

enum class TimeScheme { imex_euler, imex_rk2 };

[[nodiscard]] TimeScheme parse_scheme(const std::string& name);
[[nodiscard]] std::string scheme_name(TimeScheme s);

struct NewtonSettings {
  int max_iter = 8;
  double tol = 1e-10;
};

struct SolverConfig {
  double mu = 0.1;
  double T = 1.0;
  double dt = 1e-3;
  int dim = 2;
  int degree = 1;
  int res = 32;
  TimeScheme scheme = TimeScheme::imex_rk2;
  NewtonSettings newton;
  // Truncation dimension; empty means the whole band-limited space.
  std::optional<std::size_t> basis_size;
  // Number of time derivatives cached on the returned solution.
  int time_derivatives = 0;
  bool pressure = true;

  void validate() const;
  // T is split into an integer number of equal steps no longer than dt.
  [[nodiscard]] int steps() const;
  [[nodiscard]] double step() const { return T / steps(); }
};

// One real basis field sqrt(2) e cos(k.x) or sqrt(2) e sin(k.x), with k in the
// upper half-space and e a unit vector of the fibre kernel of d^* at k.
struct BasisMode {
  std::array<int, 3> k{};
  std::size_t slot = 0;
  int fibre = 0;
  bool sine = false;
  double k2 = 0.0;
  std::vector<double> e;
};

// Orthonormal divergence-free Fourier eigenfields spanning the band-limited
// part of ker d^* without harmonics, ordered by |k|^2, then k
// lexicographically, then fibre index, cosine before sine.
class GalerkinBasis {
 public:
  GalerkinBasis(GridPtr grid, int degree, std::vector<BasisMode> modes);

  [[nodiscard]] const GridPtr& grid_ptr() const { return grid_; }
  [[nodiscard]] const SpectralGrid& grid() const { return *grid_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t size() const { return modes_.size(); }
  [[nodiscard]] const BasisMode& mode(std::size_t j) const { return modes_[j]; }
  // |k_j|^2, the Hodge Laplacian eigenvalue of b_j.
  [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return lambda_; }

  [[nodiscard]] FormField field(std::size_t j) const;
  [[nodiscard]] FormField synthesize(const Eigen::VectorXd& g) const;
  // Coefficients (u, b_j).
  [[nodiscard]] Eigen::VectorXd project(const FormField& u) const;

  // Same fields in another order: result.mode(j) == mode(perm[j]).
  [[nodiscard]] GalerkinBasis permuted(const std::vector<std::size_t>& perm) const;
  // Position of each of this basis' modes in `other` (UsageError if absent).
  [[nodiscard]] std::vector<std::size_t> positions_in(const GalerkinBasis& other) const;

 private:
  GridPtr grid_;
  int degree_;
  std::vector<BasisMode> modes_;
  Eigen::VectorXd lambda_;
};

// Full band-limited basis size for (grid, degree).
[[nodiscard]] std::size_t max_basis_size(const GridPtr& grid, int degree);
// First m fields of the ordered basis (all of them when m is empty).
// ParameterError when m exceeds max_basis_size.
[[nodiscard]] GalerkinBasis build_basis(const GridPtr& grid, int degree, std::optional<std::size_t> m = {});

// Real orthonormal basis of the kernel of the d^* symbol at wavevector k,
// as columns (one row per form component).
[[nodiscard]] Eigen::MatrixXd coclosed_fibre(int dim, int degree, const std::array<int, 3>& k);

// Data given as a function of time, with time derivatives on request.
class TimeDependentField {
 public:
  // generator(t, j) returns the j-th time derivative at t.
  using Generator = std::function<FormField(double t, int order)>;

  TimeDependentField(GridPtr grid, int degree, Generator gen, bool identically_zero = false);

  [[nodiscard]] FormField operator()(double t) const { return derivative(t, 0); }
  [[nodiscard]] FormField derivative(double t, int order) const;
  [[nodiscard]] bool is_zero() const { return zero_; }
  [[nodiscard]] const GridPtr& grid_ptr() const { return grid_; }
  [[nodiscard]] int degree() const { return degree_; }

  static TimeDependentField zero(GridPtr grid, int degree);
  static TimeDependentField constant(FormField u);
  // a(t) u, where a(t, j) returns the j-th derivative of the scalar profile.
  static TimeDependentField modulated(FormField u, std::function<double(double, int)> a);
  // e^{-rate t} u.
  static TimeDependentField exponential(FormField u, double rate);
  // Piecewise-linear interpolation of samples; derivatives above the first vanish.
  static TimeDependentField sampled(std::vector<double> times, std::vector<FormField> fields);

 private:
  GridPtr grid_;
  int degree_;
  Generator gen_;
  bool zero_;
};

}  // namespace hodge
