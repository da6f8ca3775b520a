#include <cmath>
#include <functional>
#include <sstream>

#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/hodge_operators.hpp"
#include "hodge/sobolev.hpp"
#include "hodge/solver.hpp"
#include "solver_detail.hpp"

namespace hodge {

namespace detail {

void check_initial_datum(const GalerkinBasis& basis, const FormField& u0) {
  if (u0.degree() != basis.degree() || !(u0.grid() == basis.grid())) {
    throw UsageError("solver: initial datum does not match the basis grid/degree");
  }
  if (u0.degree() == 0) return;
  const double defect = l2_norm(codifferential(u0));
  const double scale = std::max(nabla_norm_spectral(u0, 1.0), l2_norm(u0));
  if (defect > kCoclosedTolerance * scale) {
    std::ostringstream msg;
    msg << "solver: initial datum is not coclosed (|d^* u0| = " << defect << ")";
    throw ConsistencyError(msg.str());
  }
}

void check_data(const GalerkinBasis& basis, const TimeDependentField& f, const char* what) {
  if (f.degree() != basis.degree() || !(*f.grid_ptr() == basis.grid())) {
    throw UsageError(std::string("solver: ") + what + " does not match the basis grid/degree");
  }
}

GalerkinRun integrate(const GalerkinBasis& basis, const Eigen::VectorXd& g0, const SolverConfig& cfg,
                      const Eigen::VectorXd& rates, const Rhs& rhs) {
  cfg.validate();
  const int steps = cfg.steps();
  const double h = cfg.step();
  const Eigen::VectorXd E = (-h * rates).array().exp();
  const Eigen::VectorXd E2 = (-0.5 * h * rates).array().exp();
  GalerkinRun run{basis, {}, {}};
  run.times.reserve(steps + 1);
  run.coeffs.reserve(steps + 1);
  run.times.push_back(0.0);
  run.coeffs.push_back(g0);
  Eigen::VectorXd g = g0;
  for (int n = 0; n < steps; ++n) {
    const double t = n * h;
    if (cfg.scheme == TimeScheme::imex_euler) {
      g = E.cwiseProduct(g + h * rhs(g, t));
    } else {
      const Eigen::VectorXd mid = E2.cwiseProduct(g + 0.5 * h * rhs(g, t));
      g = E.cwiseProduct(g) + h * E2.cwiseProduct(rhs(mid, t + 0.5 * h));
    }
    const double norm = g.norm();
    if (!std::isfinite(norm) || norm > kBlowUpThreshold) {
      std::ostringstream msg;
      msg << "solver: solution norm " << norm << " exceeded the blow-up threshold at t = " << (n + 1) * h;
      throw DivergenceError(msg.str());
    }
    run.times.push_back((n + 1) * h);
    run.coeffs.push_back(g);
  }
  return run;
}

}  // namespace detail

GalerkinRun integrate_linearized(const GalerkinBasis& basis, const TimeDependentField& w, const TimeDependentField& f,
                                 const FormField& u0, const SolverConfig& cfg, const NonlinearityConfig& ns) {
  cfg.validate();
  detail::check_initial_datum(basis, u0);
  detail::check_data(basis, f, "forcing");
  detail::check_data(basis, w, "coefficient field w");
  const bool coupled = !w.is_zero() && !ns.is_zero();
  const bool forced = !f.is_zero();
  const detail::Rhs rhs = [&](const Eigen::VectorXd& g, double t) -> Eigen::VectorXd {
    if (!coupled && !forced) return Eigen::VectorXd::Zero(g.size());
    FormField r(basis.grid_ptr(), basis.degree());
    if (forced) r += f(t);
    if (coupled) r -= apply_B(w(t), basis.synthesize(g), ns);
    return basis.project(r);
  };
  return detail::integrate(basis, basis.project(u0), cfg, cfg.mu * basis.eigenvalues(), rhs);
}

GalerkinRun integrate_nonlinear(const GalerkinBasis& basis, const TimeDependentField& f, const FormField& u0,
                                const SolverConfig& cfg, const NonlinearityConfig& ns) {
  cfg.validate();
  detail::check_initial_datum(basis, u0);
  detail::check_data(basis, f, "forcing");
  const bool forced = !f.is_zero();
  const bool nonlinear = !ns.is_zero();
  const detail::Rhs rhs = [&](const Eigen::VectorXd& g, double t) -> Eigen::VectorXd {
    if (!nonlinear && !forced) return Eigen::VectorXd::Zero(g.size());
    FormField r(basis.grid_ptr(), basis.degree());
    if (forced) r += f(t);
    if (nonlinear) r -= apply_N(basis.synthesize(g), ns);
    return basis.project(r);
  };
  return detail::integrate(basis, basis.project(u0), cfg, cfg.mu * basis.eigenvalues(), rhs);
}

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// f^{(j)} - sum_a C(j, a) B(w^{(a)}, u^{(j-a)})   or
// f^{(j)} - 1/2 sum_a C(j, a) B(u^{(a)}, u^{(j-a)}).
FormField differentiated_bracket(int j, double t, const std::vector<FormField>& U, const TimeDependentField& f,
                                 const TimeDependentField* w, const NonlinearityConfig& ns) {
  FormField r = f.derivative(t, j);
  if (ns.is_zero()) return r;
  if (w) {
    if (w->is_zero()) return r;
    for (int a = 0; a <= j; ++a) r.axpy(-binom(j, a), apply_B(w->derivative(t, a), U[j - a], ns));
  } else if (j == 0) {
    r -= apply_N(U[0], ns);
  } else {
    for (int a = 0; a <= j; ++a) r.axpy(-0.5 * binom(j, a), apply_B(U[a], U[j - a], ns));
  }
  return r;
}

FormField pressure_from(const FormField& bracket) {
  // The exact part d d^* phi F is (I - P) F by the complementary formula.
  return recover_pressure(hodge_decompose(bracket).exact);
}

}  // namespace

TimeSeriesSolution finish_solution(const GalerkinRun& run, const TimeDependentField& f, const TimeDependentField* w,
                                   const SolverConfig& cfg, const NonlinearityConfig& ns) {
  const GalerkinBasis& basis = run.basis;
  const int J = cfg.time_derivatives;
  const bool with_pressure = cfg.pressure && basis.degree() > 0;
  const Eigen::VectorXd rates = cfg.mu * basis.eigenvalues();
  const std::size_t N = run.times.size();

  std::vector<FormField> u;
  std::vector<FormField> p;
  std::vector<std::vector<FormField>> du(J), dp(with_pressure ? J : 0);
  u.reserve(N);
  for (std::size_t n = 0; n < N; ++n) {
    const double t = run.times[n];
    std::vector<FormField> U{basis.synthesize(run.coeffs[n])};
    U[0].set_time(t);
    Eigen::VectorXd G = run.coeffs[n];
    const int brackets = with_pressure ? J + 1 : J;
    for (int j = 0; j < brackets; ++j) {
      const FormField b = differentiated_bracket(j, t, U, f, w, ns);
      if (j < J) {
        G = -rates.cwiseProduct(G) + basis.project(b);
        U.push_back(basis.synthesize(G));
        U.back().set_time(t);
        du[j].push_back(U.back());
      }
      if (with_pressure) {
        FormField pj = pressure_from(b);
        pj.set_time(t);
        if (j == 0) {
          p.push_back(std::move(pj));
        } else {
          dp[j - 1].push_back(std::move(pj));
        }
      }
    }
    u.push_back(std::move(U[0]));
  }
  TimeSeriesSolution sol(run.times, std::move(u));
  if (with_pressure) sol.set_pressure(std::move(p));
  if (J > 0) sol.set_derivatives(std::move(du));
  if (with_pressure && J > 0) sol.set_pressure_derivatives(std::move(dp));
  return sol;
}

namespace {

GalerkinBasis basis_for(const FormField& u0, const SolverConfig& cfg) {
  cfg.validate();
  if (u0.grid().dim() != cfg.dim || u0.grid().res() != cfg.res || u0.degree() != cfg.degree) {
    throw UsageError("solver: initial datum does not match the configured dim/res/degree");
  }
  return build_basis(u0.grid_ptr(), cfg.degree, cfg.basis_size);
}

}  // namespace

TimeSeriesSolution solve_linearized(const TimeDependentField& w, const TimeDependentField& f, const FormField& u0,
                                    const SolverConfig& cfg, const NonlinearityConfig& ns) {
  const GalerkinBasis basis = basis_for(u0, cfg);
  return finish_solution(integrate_linearized(basis, w, f, u0, cfg, ns), f, &w, cfg, ns);
}

TimeSeriesSolution solve_nonlinear(const TimeDependentField& f, const FormField& u0, const SolverConfig& cfg,
                                   const NonlinearityConfig& ns) {
  const GalerkinBasis basis = basis_for(u0, cfg);
  return finish_solution(integrate_nonlinear(basis, f, u0, cfg, ns), f, nullptr, cfg, ns);
}

double coefficient_energy(const Eigen::VectorXd& g) { return g.squaredNorm(); }

double coefficient_enstrophy(const GalerkinBasis& basis, const Eigen::VectorXd& g) {
  return g.cwiseProduct(g).dot(basis.eigenvalues());
}

}  // namespace hodge
