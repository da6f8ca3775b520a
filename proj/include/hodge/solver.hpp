#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "hodge/bochner.hpp"
#include "hodge/galerkin.hpp"
#include "hodge/nonlinearity.hpp"

namespace hodge {

inline constexpr double kBlowUpThreshold = 1e12;
inline constexpr double kCoclosedTolerance = 1e-10;

// Coefficient trajectory g_n = (u(t_n), b_j) on the solver time grid.
struct GalerkinRun {
  GalerkinBasis basis;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> coeffs;
};

// Linearized problem  d_t v + mu Delta v + B(w, v) + d p = f,  d^* v = 0.
// ConsistencyError when d^* u0 != 0; DivergenceError on blow-up.
[[nodiscard]] GalerkinRun integrate_linearized(const GalerkinBasis& basis, const TimeDependentField& w,
                                               const TimeDependentField& f, const FormField& u0,
                                               const SolverConfig& cfg, const NonlinearityConfig& ns);
// Nonlinear problem  d_t u + mu Delta u + N(u) + d p = f,  d^* u = 0.
[[nodiscard]] GalerkinRun integrate_nonlinear(const GalerkinBasis& basis, const TimeDependentField& f,
                                              const FormField& u0, const SolverConfig& cfg,
                                              const NonlinearityConfig& ns);

// Solutions with pressure (when cfg.pressure) and cfg.time_derivatives cached
// time derivatives. The basis comes from cfg unless one is given.
[[nodiscard]] TimeSeriesSolution solve_linearized(const TimeDependentField& w, const TimeDependentField& f,
                                                  const FormField& u0, const SolverConfig& cfg,
                                                  const NonlinearityConfig& ns);
[[nodiscard]] TimeSeriesSolution solve_nonlinear(const TimeDependentField& f, const FormField& u0,
                                                 const SolverConfig& cfg, const NonlinearityConfig& ns);

// Turn a run into a solution: snapshots, pressure from
// (I - P)(f - B(w, u)) or (I - P)(f - N(u)), and time derivatives from the
// differentiated equation. Pass w for the linearized problem.
[[nodiscard]] TimeSeriesSolution finish_solution(const GalerkinRun& run, const TimeDependentField& f,
                                                 const TimeDependentField* w, const SolverConfig& cfg,
                                                 const NonlinearityConfig& ns);

// C(t)_{kj} = mu (d b_k, d b_j) + (B(w(t), b_k), b_j) sampled at `times`.
class LinearizedOperator {
 public:
  LinearizedOperator(GalerkinBasis basis, double mu, std::vector<double> times, Eigen::MatrixXd stokes,
                     std::vector<Eigen::MatrixXd> coupling);

  [[nodiscard]] const GalerkinBasis& basis() const { return basis_; }
  [[nodiscard]] double mu() const { return mu_; }
  [[nodiscard]] const std::vector<double>& times() const { return times_; }
  // mu (d b_k, d b_j)
  [[nodiscard]] const Eigen::MatrixXd& stokes_block() const { return stokes_; }
  // (B(w(t_n), b_k), b_j)
  [[nodiscard]] const Eigen::MatrixXd& coupling(std::size_t n) const { return coupling_[n]; }
  [[nodiscard]] Eigen::MatrixXd matrix(std::size_t n) const { return stokes_ + coupling_[n]; }
  // Coupling block at t: exact sample when t is on the grid, else linear interpolation.
  [[nodiscard]] Eigen::MatrixXd coupling_at(double t) const;

 private:
  GalerkinBasis basis_;
  double mu_;
  std::vector<double> times_;
  Eigen::MatrixXd stokes_;
  std::vector<Eigen::MatrixXd> coupling_;
};

// Step times t_n, plus midpoints t_n + dt/2 for imex-rk2.
[[nodiscard]] std::vector<double> stage_times(const SolverConfig& cfg);

[[nodiscard]] LinearizedOperator assemble_linearized(const TimeDependentField& w, double mu,
                                                     const GalerkinBasis& basis, const std::vector<double>& times,
                                                     const NonlinearityConfig& ns);

// Inverse of (d_t + mu Delta + P B(w, .), restriction to t = 0) from the
// assembled matrices; the same integrator as integrate_linearized.
[[nodiscard]] GalerkinRun apply_inverse_run(const LinearizedOperator& op, const TimeDependentField& f,
                                            const FormField& u0, const SolverConfig& cfg);
[[nodiscard]] TimeSeriesSolution apply_inverse(const LinearizedOperator& op, const TimeDependentField& f,
                                               const FormField& u0, const SolverConfig& cfg);

struct ForwardResidual {
  double interior = 0.0;  // (sum_n dt |r_n|^2)^{1/2}
  double initial = 0.0;   // |g_0 - (u0, b)|
  [[nodiscard]] double total() const { return interior + initial; }
};

// Continuous forward map applied to sampled velocities: the time derivative
// by second-order finite differences, then
//   r_n = d_t g + mu Lambda g + (B(w, u) - f, b)   (w given)
//   r_n = d_t g + mu Lambda g + (N(u) - f, b)      (w null)
[[nodiscard]] ForwardResidual forward_residual(const GalerkinBasis& basis, const TimeSeriesSolution& sol,
                                               const TimeDependentField* w, const TimeDependentField& f,
                                               const FormField& u0, double mu, const NonlinearityConfig& ns);

// Discrete nonlinear map of the imex-euler scheme,
//   D(g)_0 = g_0,  D(g)_{n+1} = (e^{mu Lambda dt} g_{n+1} - g_n) / dt + (N(u_n), b),
// so that D(g) = ((u0, b), (f(t_n), b)) is exactly one imex-euler solve.
using Trajectory = std::vector<Eigen::VectorXd>;
[[nodiscard]] Trajectory discrete_map(const GalerkinBasis& basis, const Trajectory& g, const SolverConfig& cfg,
                                      const NonlinearityConfig& ns);
// Frechet derivative of discrete_map at g applied to v.
[[nodiscard]] Trajectory discrete_map_derivative(const GalerkinBasis& basis, const Trajectory& g,
                                                 const Trajectory& v, const SolverConfig& cfg,
                                                 const NonlinearityConfig& ns);
// ((u0, b), (f(t_n), b)) in the layout of discrete_map.
[[nodiscard]] Trajectory discrete_data(const GalerkinBasis& basis, const TimeDependentField& f, const FormField& u0,
                                       const SolverConfig& cfg);
// (|F_0|^2 + sum_n dt |F_n|^2)^{1/2}
[[nodiscard]] double trajectory_norm(const Trajectory& F, double dt);

struct NewtonResult {
  GalerkinRun run;
  std::optional<TimeSeriesSolution> solution;  // with pressure, when converged
  int iterations = 0;
  std::vector<double> residuals;  // residual before each iteration and after the last
  bool converged = false;
};

// Plain Newton on discrete_map(g) = discrete_data(f_target, u0_target),
// starting from the seed trajectory. Each step solves the linearized problem
// exactly. Non-convergence is reported, not thrown.
[[nodiscard]] NewtonResult newton_local_inverse(const TimeDependentField& f_target, const FormField& u0_target,
                                                const GalerkinRun& seed, const SolverConfig& cfg,
                                                const NonlinearityConfig& ns);

struct GalerkinLevel {
  std::size_t m = 0;
  // sup_t |grad^{k'} u|^2 + mu int |grad^{k'+1} u|^2 for k' = 0, 1
  double bound0 = 0.0;
  double bound1 = 0.0;
  // max_t |u_m - u_{previous m}|, absent on the first level
  std::optional<double> cauchy;
};

struct GalerkinStudy {
  std::vector<GalerkinLevel> levels;
  bool uniformly_bounded = false;
  bool cauchy_decay = false;
};

// Nonlinear solves with the first m basis fields for each m in `sizes`
// (increasing). Bounded: every level stays within 10% of the finest level.
// Cauchy decay: each difference at most half the previous one.
[[nodiscard]] GalerkinStudy galerkin_convergence_study(const GridPtr& grid, const TimeDependentField& f,
                                                       const FormField& u0, const SolverConfig& cfg,
                                                       const NonlinearityConfig& ns,
                                                       const std::vector<std::size_t>& sizes);

// Energy |u|^2 and enstrophy analogue |grad u|^2 of a coefficient vector.
[[nodiscard]] double coefficient_energy(const Eigen::VectorXd& g);
[[nodiscard]] double coefficient_enstrophy(const GalerkinBasis& basis, const Eigen::VectorXd& g);

}  // namespace hodge
