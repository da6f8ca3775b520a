#include <algorithm>
#include <cmath>

#include "hodge/errors.hpp"
#include "hodge/sobolev.hpp"
#include "hodge/solver.hpp"
#include "solver_detail.hpp"

namespace hodge {

namespace {

void check_trajectory(const GalerkinBasis& basis, const Trajectory& g, const SolverConfig& cfg) {
  if (g.size() != static_cast<std::size_t>(cfg.steps()) + 1) {
    throw UsageError("discrete map: trajectory length does not match the time grid");
  }
  for (const auto& v : g) {
    if (static_cast<std::size_t>(v.size()) != basis.size()) throw UsageError("discrete map: coefficient size mismatch");
  }
}

}  // namespace

Trajectory discrete_map(const GalerkinBasis& basis, const Trajectory& g, const SolverConfig& cfg,
                        const NonlinearityConfig& ns) {
  check_trajectory(basis, g, cfg);
  const double h = cfg.step();
  const Eigen::VectorXd Einv = (h * cfg.mu * basis.eigenvalues()).array().exp();
  Trajectory D;
  D.reserve(g.size());
  D.push_back(g[0]);
  for (std::size_t n = 0; n + 1 < g.size(); ++n) {
    Eigen::VectorXd d = (Einv.cwiseProduct(g[n + 1]) - g[n]) / h;
    if (!ns.is_zero()) d += basis.project(apply_N(basis.synthesize(g[n]), ns));
    D.push_back(std::move(d));
  }
  return D;
}

Trajectory discrete_map_derivative(const GalerkinBasis& basis, const Trajectory& g, const Trajectory& v,
                                   const SolverConfig& cfg, const NonlinearityConfig& ns) {
  check_trajectory(basis, g, cfg);
  check_trajectory(basis, v, cfg);
  const double h = cfg.step();
  const Eigen::VectorXd Einv = (h * cfg.mu * basis.eigenvalues()).array().exp();
  Trajectory D;
  D.reserve(g.size());
  D.push_back(v[0]);
  for (std::size_t n = 0; n + 1 < g.size(); ++n) {
    Eigen::VectorXd d = (Einv.cwiseProduct(v[n + 1]) - v[n]) / h;
    if (!ns.is_zero()) d += basis.project(apply_B(basis.synthesize(g[n]), basis.synthesize(v[n]), ns));
    D.push_back(std::move(d));
  }
  return D;
}

Trajectory discrete_data(const GalerkinBasis& basis, const TimeDependentField& f, const FormField& u0,
                         const SolverConfig& cfg) {
  detail::check_data(basis, f, "forcing");
  const int steps = cfg.steps();
  const double h = cfg.step();
  Trajectory D;
  D.reserve(steps + 1);
  D.push_back(basis.project(u0));
  for (int n = 0; n < steps; ++n) {
    D.push_back(f.is_zero() ? Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()))
                            : basis.project(f(n * h)));
  }
  return D;
}

double trajectory_norm(const Trajectory& F, double dt) {
  double s = F.empty() ? 0.0 : F[0].squaredNorm();
  for (std::size_t n = 1; n < F.size(); ++n) s += dt * F[n].squaredNorm();
  return std::sqrt(s);
}

NewtonResult newton_local_inverse(const TimeDependentField& f_target, const FormField& u0_target,
                                  const GalerkinRun& seed, const SolverConfig& cfg, const NonlinearityConfig& ns) {
  cfg.validate();
  const GalerkinBasis& basis = seed.basis;
  detail::check_initial_datum(basis, u0_target);
  const double h = cfg.step();
  const Eigen::VectorXd E = (-h * cfg.mu * basis.eigenvalues()).array().exp();
  const Trajectory target = discrete_data(basis, f_target, u0_target, cfg);

  NewtonResult out{seed, std::nullopt, 0, {}, false};
  Trajectory& g = out.run.coeffs;
  check_trajectory(basis, g, cfg);
  for (;;) {
    Trajectory F = discrete_map(basis, g, cfg, ns);
    for (std::size_t n = 0; n < F.size(); ++n) F[n] = target[n] - F[n];
    const double res = trajectory_norm(F, h);
    out.residuals.push_back(res);
    if (!std::isfinite(res)) break;
    if (res <= cfg.newton.tol) {
      out.converged = true;
      break;
    }
    if (out.iterations >= cfg.newton.max_iter) break;
    // The Jacobian inverse is one linearized imex-euler solve about g.
    Eigen::VectorXd delta = F[0];
    for (std::size_t n = 0; n + 1 < g.size(); ++n) {
      Eigen::VectorXd r = F[n + 1];
      if (!ns.is_zero()) r -= basis.project(apply_B(basis.synthesize(g[n]), basis.synthesize(delta), ns));
      g[n] += delta;
      delta = E.cwiseProduct(delta + h * r);
    }
    g.back() += delta;
    ++out.iterations;
  }
  if (out.converged) {
    SolverConfig euler = cfg;
    euler.scheme = TimeScheme::imex_euler;
    out.solution = finish_solution(out.run, f_target, nullptr, euler, ns);
  }
  return out;
}

GalerkinStudy galerkin_convergence_study(const GridPtr& grid, const TimeDependentField& f, const FormField& u0,
                                         const SolverConfig& cfg, const NonlinearityConfig& ns,
                                         const std::vector<std::size_t>& sizes) {
  if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end())) {
    throw UsageError("convergence study: sizes must be non-empty and increasing");
  }
  GalerkinStudy study;
  std::optional<GalerkinRun> previous;
  for (std::size_t m : sizes) {
    const GalerkinBasis basis = build_basis(grid, cfg.degree, m);
    GalerkinRun run = integrate_nonlinear(basis, f, u0, cfg, ns);
    const Eigen::VectorXd& lam = basis.eigenvalues();
    std::vector<double> e1, e2;
    double sup0 = 0.0, sup1 = 0.0;
    for (const auto& g : run.coeffs) {
      const Eigen::VectorXd g2 = g.cwiseProduct(g);
      sup0 = std::max(sup0, g2.sum());
      sup1 = std::max(sup1, g2.dot(lam));
      e1.push_back(g2.dot(lam));
      e2.push_back(g2.dot(lam.cwiseProduct(lam)));
    }
    GalerkinLevel level;
    level.m = m;
    level.bound0 = sup0 + cfg.mu * trapezoid(run.times, e1);
    level.bound1 = sup1 + cfg.mu * trapezoid(run.times, e2);
    if (previous) {
      double worst = 0.0;
      const auto pm = static_cast<Eigen::Index>(previous->basis.size());
      for (std::size_t n = 0; n < run.coeffs.size(); ++n) {
        Eigen::VectorXd d = run.coeffs[n];
        d.head(pm) -= previous->coeffs[n];
        worst = std::max(worst, d.norm());
      }
      level.cauchy = worst;
    }
    study.levels.push_back(level);
    previous = std::move(run);
  }
  auto spread_ok = [&](auto get) {
    double lo = get(study.levels.front()), hi = lo;
    for (const auto& l : study.levels) {
      lo = std::min(lo, get(l));
      hi = std::max(hi, get(l));
    }
    return hi <= 1.1 * lo;
  };
  study.uniformly_bounded = spread_ok([](const GalerkinLevel& l) { return l.bound0; }) &&
                            spread_ok([](const GalerkinLevel& l) { return l.bound1; });
  study.cauchy_decay = true;
  for (std::size_t i = 2; i < study.levels.size(); ++i) {
    if (*study.levels[i].cauchy > 0.5 * *study.levels[i - 1].cauchy) study.cauchy_decay = false;
  }
  return study;
}

}  // namespace hodge
