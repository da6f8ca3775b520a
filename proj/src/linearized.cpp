#include <algorithm>
#include <cmath>

#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/solver.hpp"
#include "solver_detail.hpp"

namespace hodge {

LinearizedOperator::LinearizedOperator(GalerkinBasis basis, double mu, std::vector<double> times,
                                       Eigen::MatrixXd stokes, std::vector<Eigen::MatrixXd> coupling)
    : basis_(std::move(basis)),
      mu_(mu),
      times_(std::move(times)),
      stokes_(std::move(stokes)),
      coupling_(std::move(coupling)) {
  if (times_.empty() || times_.size() != coupling_.size()) throw UsageError("LinearizedOperator: sample mismatch");
}

Eigen::MatrixXd LinearizedOperator::coupling_at(double t) const {
  const double tol = 1e-12 * std::max(1.0, std::abs(times_.back()));
  auto it = std::lower_bound(times_.begin(), times_.end(), t - tol);
  if (it != times_.end() && std::abs(*it - t) <= tol) return coupling_[it - times_.begin()];
  if (times_.size() == 1) return coupling_.front();
  std::size_t i = std::clamp<std::size_t>(it - times_.begin(), 1, times_.size() - 1);
  const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
  return (1.0 - w) * coupling_[i - 1] + w * coupling_[i];
}

std::vector<double> stage_times(const SolverConfig& cfg) {
  const int steps = cfg.steps();
  const double h = cfg.step();
  std::vector<double> t;
  for (int n = 0; n <= steps; ++n) {
    t.push_back(n * h);
    if (cfg.scheme == TimeScheme::imex_rk2 && n < steps) t.push_back((n + 0.5) * h);
  }
  return t;
}

LinearizedOperator assemble_linearized(const TimeDependentField& w, double mu, const GalerkinBasis& basis,
                                       const std::vector<double>& times, const NonlinearityConfig& ns) {
  detail::check_data(basis, w, "coefficient field w");
  if (ns.degree != basis.degree() || ns.dim != basis.grid().dim()) {
    throw UsageError("assemble_linearized: nonlinearity does not match the basis degree");
  }
  const auto m = static_cast<Eigen::Index>(basis.size());
  std::vector<FormField> fields;
  fields.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) fields.push_back(basis.field(k));

  Eigen::MatrixXd stokes = Eigen::MatrixXd::Zero(m, m);
  if (basis.degree() < basis.grid().dim()) {
    for (Eigen::Index k = 0; k < m; ++k) {
      stokes.row(k) = mu * basis.project(codifferential(exterior_derivative(fields[k]))).transpose();
    }
  }

  std::vector<Eigen::MatrixXd> coupling;
  coupling.reserve(times.size());
  std::optional<FormField> previous;
  for (double t : times) {
    if (w.is_zero() || ns.is_zero()) {
      coupling.push_back(Eigen::MatrixXd::Zero(m, m));
      continue;
    }
    FormField wt = w(t);
    if (previous && (wt - *previous).max_abs() == 0.0) {
      coupling.push_back(coupling.back());
      continue;
    }
    Eigen::MatrixXd C(m, m);
    for (Eigen::Index k = 0; k < m; ++k) C.row(k) = basis.project(apply_B(wt, fields[k], ns)).transpose();
    coupling.push_back(std::move(C));
    previous = std::move(wt);
  }
  return LinearizedOperator(basis, mu, times, std::move(stokes), std::move(coupling));
}

GalerkinRun apply_inverse_run(const LinearizedOperator& op, const TimeDependentField& f, const FormField& u0,
                              const SolverConfig& cfg) {
  const GalerkinBasis& basis = op.basis();
  detail::check_initial_datum(basis, u0);
  detail::check_data(basis, f, "forcing");
  // Diagonal of the Stokes block is integrated exactly; any remainder goes
  // with the coupling term.
  const Eigen::VectorXd rates = op.stokes_block().diagonal();
  Eigen::MatrixXd rest = op.stokes_block();
  rest.diagonal().setZero();
  const bool forced = !f.is_zero();
  const detail::Rhs rhs = [&](const Eigen::VectorXd& g, double t) -> Eigen::VectorXd {
    // dg_j/dt = -sum_k C_{kj} g_k + (f, b_j)
    Eigen::VectorXd r = -(rest + op.coupling_at(t)).transpose() * g;
    if (forced) r += basis.project(f(t));
    return r;
  };
  return detail::integrate(basis, basis.project(u0), cfg, rates, rhs);
}

TimeSeriesSolution apply_inverse(const LinearizedOperator& op, const TimeDependentField& f, const FormField& u0,
                                 const SolverConfig& cfg) {
  const GalerkinRun run = apply_inverse_run(op, f, u0, cfg);
  std::vector<FormField> u;
  u.reserve(run.coeffs.size());
  for (std::size_t n = 0; n < run.coeffs.size(); ++n) {
    u.push_back(op.basis().synthesize(run.coeffs[n]));
    u.back().set_time(run.times[n]);
  }
  return TimeSeriesSolution(run.times, std::move(u));
}

ForwardResidual forward_residual(const GalerkinBasis& basis, const TimeSeriesSolution& sol,
                                 const TimeDependentField* w, const TimeDependentField& f, const FormField& u0,
                                 double mu, const NonlinearityConfig& ns) {
  const auto& t = sol.times();
  const std::size_t N = t.size();
  if (N < 3) throw UsageError("forward_residual: need at least three samples");
  const double h = t[1] - t[0];
  for (std::size_t n = 1; n < N; ++n) {
    if (std::abs(t[n] - t[n - 1] - h) > 1e-9 * h) throw UsageError("forward_residual: samples must be uniform");
  }
  std::vector<Eigen::VectorXd> g;
  g.reserve(N);
  for (std::size_t n = 0; n < N; ++n) g.push_back(basis.project(sol.velocity(n)));
  const Eigen::VectorXd rates = mu * basis.eigenvalues();

  double sum = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    Eigen::VectorXd dg;
    if (n == 0) {
      dg = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
    } else if (n == N - 1) {
      dg = (3.0 * g[n] - 4.0 * g[n - 1] + g[n - 2]) / (2.0 * h);
    } else {
      dg = (g[n + 1] - g[n - 1]) / (2.0 * h);
    }
    FormField rest = -1.0 * f(t[n]);
    if (!ns.is_zero()) {
      if (w) {
        if (!w->is_zero()) rest += apply_B((*w)(t[n]), sol.velocity(n), ns);
      } else {
        rest += apply_N(sol.velocity(n), ns);
      }
    }
    const Eigen::VectorXd r = dg + rates.cwiseProduct(g[n]) + basis.project(rest);
    sum += h * r.squaredNorm();
  }
  ForwardResidual out;
  out.interior = std::sqrt(sum);
  out.initial = (g[0] - basis.project(u0)).norm();
  return out;
}

}  // namespace hodge
