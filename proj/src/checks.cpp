// Check groups behind run_experiment / verify_all. Each group records
// measured values against fixed tolerances.
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "checks.hpp"
#include "hodge/complex_ops.hpp"
#include "hodge/config.hpp"
#include "hodge/errors.hpp"
#include "hodge/hodge_operators.hpp"
#include "hodge/random_field.hpp"
#include "hodge/snapshot_io.hpp"
#include "hodge/sobolev.hpp"
#include "hodge/solver.hpp"
#include "hodge/transform.hpp"

namespace hodge::detail {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(VerificationReport& rep) : rep_(rep), last_(Clock::now()) {}

  // pass iff value <= tol
  void at_most(const std::string& id, const std::string& anchor, double value, double tol) {
    push(id, anchor, value, tol, value <= tol ? CheckStatus::pass : CheckStatus::fail);
  }
  // pass iff value >= tol
  void at_least(const std::string& id, const std::string& anchor, double value, double tol) {
    push(id, anchor, value, tol, value >= tol ? CheckStatus::pass : CheckStatus::fail);
  }
  void flag(const std::string& id, const std::string& anchor, bool ok) {
    push(id, anchor, ok ? 1.0 : 0.0, 1.0, ok ? CheckStatus::pass : CheckStatus::fail);
  }
  void measured(const std::string& id, const std::string& anchor, double value) {
    push(id, anchor, value, 0.0, CheckStatus::measured);
  }

 private:
  void push(const std::string& id, const std::string& anchor, double value, double tol, CheckStatus st) {
    const auto now = Clock::now();
    if (std::isnan(value)) st = CheckStatus::fail;
    rep_.add({id, anchor, st, value, tol, std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

  VerificationReport& rep_;
  Clock::time_point last_;
};

double rel(const FormField& a, const FormField& b, double scale) {
  FormField d = a;
  d -= b;
  return l2_norm(d) / (scale > 0.0 ? scale : 1.0);
}

FormField sample(const GridPtr& grid, int degree, const std::vector<std::function<double(const std::array<double, 3>&)>>& fs) {
  PhysicalField f{grid, degree, std::vector<double>(fs.size() * grid->size())};
  for (std::size_t c = 0; c < fs.size(); ++c)
    for (std::size_t x = 0; x < grid->size(); ++x) f.values[c * grid->size() + x] = fs[c](sample_point(*grid, x));
  return from_physical(f);
}

// (sin x cos y, -cos x sin y[, 0])
FormField taylor_green(const GridPtr& grid) {
  std::vector<std::function<double(const std::array<double, 3>&)>> fs = {
      [](const auto& x) { return std::sin(x[0]) * std::cos(x[1]); },
      [](const auto& x) { return -std::cos(x[0]) * std::sin(x[1]); }};
  if (grid->dim() == 3) fs.push_back([](const auto&) { return 0.0; });
  return sample(grid, 1, fs);
}

FormField taylor_green_pressure(const GridPtr& grid, double mu, double t) {
  const double a = 0.25 * std::exp(-4.0 * mu * t);
  return sample(grid, 0, {[a](const auto& x) { return a * (std::cos(2 * x[0]) + std::cos(2 * x[1])); }});
}

// Smooth coclosed mean-free field of unit norm (times `norm`).
FormField coclosed(const GridPtr& grid, int band, std::mt19937_64& rng, double norm = 1.0) {
  FormField u = helmholtz_project(random_smooth_form(grid, 1, band, 2.0, rng));
  u -= harmonic_projection(u);
  u *= norm / l2_norm(u);
  return u;
}

double order(double coarse, double fine) { return std::log2(coarse / fine); }

void hodge_group(const Context& ctx, Recorder& rec) {
  const int n = ctx.dim;
  auto grid = SpectralGrid::make(n, ctx.res);
  const TorusDeRham cx(n);
  std::mt19937_64 rng(ctx.seed);
  const int per_degree = 20;
  double pl = 0, pr = 0, idem = 0, selfadj = 0, orth = 0, cocl = 0, routes = 0, decomp = 0, dd = 0, cc = 0, adj = 0;
  for (int deg = 0; deg <= n; ++deg) {
    for (int t = 0; t < per_degree; ++t) {
      const FormField u = random_form(grid, deg, grid->dealias_cutoff(), rng);
      const FormField v = random_form(grid, deg, grid->dealias_cutoff(), rng);
      const double nu = l2_norm(u), nv = l2_norm(v);
      const FormField ref = u - harmonic_projection(u);
      pl = std::max(pl, rel(parametrix(hodge_laplacian(u)), ref, nu));
      pr = std::max(pr, rel(hodge_laplacian(parametrix(u)), ref, nu));
      const FormField Pu = helmholtz_project(u, cx);
      idem = std::max(idem, rel(helmholtz_project(Pu, cx), Pu, nu));
      selfadj = std::max(selfadj, std::abs(inner_product(Pu, v) - inner_product(u, helmholtz_project(v, cx))) / (nu * nv));
      orth = std::max(orth, std::abs(inner_product(Pu, u - Pu)) / (nu * nu));
      routes = std::max(routes, rel(helmholtz_project_complement(u, cx), Pu, nu));
      decomp = std::max(decomp, rel(hodge_decompose(u, cx).reconstruct(), u, nu));
      if (deg > 0) {
        cocl = std::max(cocl, l2_norm(codifferential(Pu)) / std::max(l2_norm(codifferential(u)), nu));
      }
      if (deg + 2 <= n) dd = std::max(dd, l2_norm(exterior_derivative(exterior_derivative(u))) / nu);
      if (deg >= 2) cc = std::max(cc, l2_norm(codifferential(codifferential(u))) / nu);
      if (deg < n) {
        const FormField w = random_form(grid, deg + 1, grid->dealias_cutoff(), rng);
        const double lhs = inner_product(exterior_derivative(u), w);
        const double rhs = inner_product(u, codifferential(w));
        adj = std::max(adj, std::abs(lhs - rhs) / (l2_norm(exterior_derivative(u)) * l2_norm(w) + nu * l2_norm(w)));
      }
    }
  }
  rec.at_most("hodge.parametrix-left", "hodge-parametrix", pl, 1e-12);
  rec.at_most("hodge.parametrix-right", "hodge-parametrix", pr, 1e-12);
  rec.at_most("hodge.projector-idempotent", "helmholtz-projector", idem, 1e-12);
  rec.at_most("hodge.projector-self-adjoint", "helmholtz-projector", selfadj, 1e-12);
  rec.at_most("hodge.projector-orthogonal", "helmholtz-projector", orth, 1e-12);
  rec.at_most("hodge.projector-coclosed", "helmholtz-projector", cocl, 1e-12);
  rec.at_most("hodge.projector-routes", "helmholtz-projector", routes, 1e-12);
  rec.at_most("hodge.decomposition", "hodge-decomposition", decomp, 1e-12);
  rec.at_most("complex.dd-zero", "complex-property", dd, 1e-12);
  rec.at_most("complex.codiff-codiff-zero", "complex-property", cc, 1e-12);
  rec.at_most("complex.adjoint", "complex-property", adj, 1e-12);
}

void norms_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  std::mt19937_64 rng(ctx.seed + 1);
  double tilde = 0.0;
  for (int deg = 0; deg <= ctx.dim; ++deg) {
    for (int t = 0; t < 5; ++t) {
      const FormField u = random_form(grid, deg, grid->dealias_cutoff(), rng);
      for (int m = 1; m <= 4; ++m) {
        const double a = tilde_norm(u, m, 2.0), b = nabla_norm(u, {static_cast<double>(m), 2.0});
        tilde = std::max(tilde, std::abs(a - b) / b);
      }
    }
  }
  rec.at_most("norms.tilde-equals-nabla", "norm-equivalence", tilde, 1e-12);

  // u(t) = e^{-t} sin x1 with exact derivatives: trapezoid error is O(dt^2).
  const FormField s = sample(grid, 0, {[](const auto& x) { return std::sin(x[0]); }});
  const double exact = 4.0 * (0.5 + (1.0 - std::exp(-2.0)) / 4.0);
  std::vector<double> err;
  for (int steps : {20, 40, 80}) {
    std::vector<double> t;
    std::vector<FormField> u;
    std::vector<std::vector<FormField>> du(1);
    for (int k = 0; k <= steps; ++k) {
      const double tk = static_cast<double>(k) / steps;
      t.push_back(tk);
      u.push_back(std::exp(-tk) * s);
      du[0].push_back(-std::exp(-tk) * s);
    }
    TimeSeriesSolution sol(t, u);
    sol.set_derivatives(du);
    err.push_back(std::abs(bochner_norm_squared(sol, {0, 1, BochnerRole::velocity}) - exact));
  }
  rec.at_least("norms.bochner-order", "bochner-norms", std::min(order(err[0], err[1]), order(err[1], err[2])), 1.95);
}

void gn_group(const Context& ctx, Recorder& rec) {
  // Critical Sobolev case on T^3: ||v||_6 against ||grad v||_2.
  const GagliardoNirenbergIndices idx{0, 1, 6.0, 2.0, 2.0};
  const int coarse = std::max(8, ctx.res / 2);
  const auto a = gagliardo_nirenberg_survey(SpectralGrid::make(3, coarse), 0, idx, ctx.gn_fields, 4, ctx.seed + 2);
  const auto b = gagliardo_nirenberg_survey(SpectralGrid::make(3, 2 * coarse), 0, idx, ctx.gn_fields, 4, ctx.seed + 2);
  rec.measured("gn.exponent", "gagliardo-nirenberg", a.a);
  rec.measured("gn.max-ratio", "gagliardo-nirenberg", b.max_ratio);
  rec.at_most("gn.resolution-change", "gagliardo-nirenberg", std::abs(a.max_ratio - b.max_ratio) / b.max_ratio, 0.10);
}

void continuity_group(const Context& ctx, Recorder& rec) {
  const auto ns = navier_stokes_preset(ctx.dim);
  // Band res/8 keeps quadratic products inside the dealiasing mask.
  const int band = std::max(1, ctx.res / 8);
  const auto a = empirical_continuity_bound(ns, SpectralGrid::make(ctx.dim, ctx.res), 20, 0, 1, band, ctx.seed + 3);
  const auto b = empirical_continuity_bound(ns, SpectralGrid::make(ctx.dim, 2 * ctx.res), 20, 0, 1, band, ctx.seed + 3);
  rec.measured("continuity.max-ratio", "continuity-of-B", a.max_ratio);
  rec.at_most("continuity.resolution-change", "continuity-of-B", std::abs(a.max_ratio - b.max_ratio) / a.max_ratio, 0.15);

  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  std::mt19937_64 rng(ctx.seed + 4);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const FormField w = coclosed(grid, grid->dealias_cutoff(), rng);
    const FormField u = random_form(grid, 1, grid->dealias_cutoff(), rng);
    const auto r = trilinear_form(w, u, ns);
    worst = std::max(worst, std::abs(*r.convective) / (l2_norm(w) * inner_product(u, u)));
  }
  rec.at_most("nonlinearity.trilinear-vanishes", "trilinear-form", worst, 1e-10);
}

void basis_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, std::min(ctx.res, ctx.dim == 2 ? 32 : 8));
  const GalerkinBasis basis = build_basis(grid, 1);
  std::vector<FormField> b;
  for (std::size_t j = 0; j < basis.size(); ++j) b.push_back(basis.field(j));
  double gram = 0.0, div = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    div = std::max(div, l2_norm(codifferential(b[j])));
    for (std::size_t l = j; l < std::min(b.size(), j + 64); ++l)
      gram = std::max(gram, std::abs(inner_product(b[j], b[l]) - (j == l ? 1.0 : 0.0)));
  }
  rec.at_most("basis.orthonormal", "galerkin-basis", gram, 1e-12);
  rec.at_most("basis.coclosed", "galerkin-basis", div, 1e-12);
}

SolverConfig base_solver(const Context& ctx) {
  SolverConfig cfg = ctx.solver;
  cfg.dim = ctx.dim;
  cfg.res = ctx.res;
  cfg.degree = 1;
  cfg.basis_size.reset();
  cfg.time_derivatives = 0;
  return cfg;
}

void taylor_green_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  const auto ns = navier_stokes_preset(ctx.dim);
  SolverConfig cfg = base_solver(ctx);
  cfg.pressure = true;
  const FormField u0 = taylor_green(grid);
  const auto zero = TimeDependentField::zero(grid, 1);
  const auto sol = solve_nonlinear(zero, u0, cfg, ns);
  const double T = sol.horizon();
  rec.at_most("tg.velocity-error", "navier-stokes-equation",
              rel(sol.velocity().back(), std::exp(-2 * cfg.mu * T) * u0, std::exp(-2 * cfg.mu * T) * l2_norm(u0)), 1e-5);
  const FormField pex = taylor_green_pressure(grid, cfg.mu, T);
  rec.at_most("tg.pressure-error", "pressure-formula", rel(sol.pressure().back(), pex, l2_norm(pex)), 1e-4);
  double div = 0.0;
  for (const auto& u : sol.velocity()) div = std::max(div, l2_norm(codifferential(u)));
  rec.at_most("tg.divergence-free", "divergence-free", div, 1e-12);

  // Order by self-convergence on Taylor-Green plus a smooth perturbation.
  std::mt19937_64 rng(ctx.seed + 5);
  const FormField v0 = u0 + coclosed(grid, 4, rng, 0.3 * l2_norm(u0));
  const GalerkinBasis basis = build_basis(grid, 1);
  SolverConfig oc = cfg;
  oc.T = 0.5;
  std::vector<Eigen::VectorXd> ends;
  for (double dt : {8e-3, 4e-3, 2e-3}) {
    oc.dt = dt;
    ends.push_back(integrate_nonlinear(basis, zero, v0, oc, ns).coeffs.back());
  }
  rec.at_least("tg.observed-order", "navier-stokes-equation",
               order((ends[0] - ends[1]).norm(), (ends[1] - ends[2]).norm()), cfg.scheme == TimeScheme::imex_rk2 ? 1.9 : 0.9);
}

void energy_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  const auto ns = navier_stokes_preset(ctx.dim);
  std::mt19937_64 rng(ctx.seed + 6);
  const FormField u0 = coclosed(grid, 4, rng);
  const GalerkinBasis basis = build_basis(grid, 1);
  SolverConfig cfg = base_solver(ctx);
  cfg.scheme = TimeScheme::imex_rk2;
  cfg.T = 0.5;
  const auto zero = TimeDependentField::zero(grid, 1);
  std::vector<double> residual;
  bool monotone = true;
  for (double dt : {4e-3, 2e-3, 1e-3}) {
    cfg.dt = dt;
    const auto run = integrate_nonlinear(basis, zero, u0, cfg, ns);
    std::vector<double> ens;
    for (std::size_t n = 0; n < run.coeffs.size(); ++n) {
      ens.push_back(coefficient_enstrophy(basis, run.coeffs[n]));
      if (n > 0 && run.coeffs[n].norm() > run.coeffs[n - 1].norm()) monotone = false;
    }
    residual.push_back(std::abs(coefficient_energy(run.coeffs.back()) - coefficient_energy(run.coeffs.front()) +
                                2 * cfg.mu * trapezoid(run.times, ens)));
  }
  rec.at_least("energy.identity-order", "energy-law", std::min(order(residual[0], residual[1]), order(residual[1], residual[2])), 1.9);
  rec.flag("energy.monotone", "energy-law", monotone);

  // Lions identity with a forced run and the cached derivative; Gronwall
  // envelope for Y = |u|^2 <= |u0|^2 + int |f|^2 + int Y.
  FormField fb = random_form(grid, 1, 4, rng);
  fb *= 1.0 / l2_norm(fb);
  const auto f = TimeDependentField::modulated(fb, [](double t, int j) {
    const double c = std::cos(2 * t), s = std::sin(2 * t);
    const double v[4] = {c, -2 * s, -4 * c, 8 * s};
    return v[j % 4];
  });
  cfg.T = 0.2;
  cfg.time_derivatives = 1;
  cfg.pressure = false;
  std::vector<double> lions;
  for (double dt : {2e-3, 1e-3}) {
    cfg.dt = dt;
    const auto sol = solve_nonlinear(f, u0, cfg, ns);
    const double h = sol.times()[1];
    double worst = 0.0;
    for (std::size_t n = 1; n + 1 < sol.samples(); ++n) {
      const double dE = (inner_product(sol.velocity(n + 1), sol.velocity(n + 1)) -
                         inner_product(sol.velocity(n - 1), sol.velocity(n - 1))) / (2 * h);
      worst = std::max(worst, std::abs(dE - 2 * inner_product(sol.derivative(1, n), sol.velocity(n))));
    }
    lions.push_back(worst);
    if (dt == 1e-3) {
      std::vector<double> A, B, Y, f2;
      for (std::size_t n = 0; n < sol.samples(); ++n) {
        const FormField fn = f(sol.times()[n]);
        f2.push_back(inner_product(fn, fn));
        const std::vector<double> tp(sol.times().begin(), sol.times().begin() + n + 1);
        const std::vector<double> fp(f2.begin(), f2.end());
        A.push_back(inner_product(u0, u0) + (n > 0 ? trapezoid(tp, fp) : 0.0));
        B.push_back(1.0);
        Y.push_back(inner_product(sol.velocity(n), sol.velocity(n)));
      }
      const auto g = gronwall_envelope(sol.times(), A, B, Y);
      rec.flag("energy.gronwall-envelope", "gronwall", g.hypotheses_hold && g.envelope_holds());
    }
  }
  rec.at_least("energy.lions-order", "lions-identity", order(lions[0], lions[1]), 1.9);
}

void linearized_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  const auto ns = navier_stokes_preset(ctx.dim);
  std::mt19937_64 rng(ctx.seed + 7);
  const std::size_t m = std::min<std::size_t>(60, max_basis_size(grid, 1));
  const GalerkinBasis basis = build_basis(grid, 1, m);
  const FormField u0 = basis.synthesize(basis.project(coclosed(grid, 4, rng)));
  const auto W = TimeDependentField::constant(coclosed(grid, 3, rng));
  const auto f = TimeDependentField::modulated(random_smooth_form(grid, 1, 3, 2.0, rng), [](double t, int j) {
    return j == 0 ? std::cos(3 * t) : -3 * std::sin(3 * t);
  });
  SolverConfig cfg = base_solver(ctx);
  cfg.basis_size = m;
  cfg.T = 0.5;
  cfg.pressure = false;
  double dual = 0.0;
  for (auto [scheme, id, lo] : {std::tuple{TimeScheme::imex_euler, "linearized.round-trip-order-euler", 0.9},
                                std::tuple{TimeScheme::imex_rk2, "linearized.round-trip-order-rk2", 1.9}}) {
    cfg.scheme = scheme;
    std::vector<double> res;
    for (double dt : {2e-2, 1e-2, 5e-3}) {
      cfg.dt = dt;
      const auto op = assemble_linearized(W, cfg.mu, basis, stage_times(cfg), ns);
      const GalerkinRun inv = apply_inverse_run(op, f, u0, cfg);
      const GalerkinRun direct = integrate_linearized(basis, W, f, u0, cfg, ns);
      for (std::size_t n = 0; n < inv.coeffs.size(); ++n) dual = std::max(dual, (inv.coeffs[n] - direct.coeffs[n]).norm());
      res.push_back(forward_residual(basis, apply_inverse(op, f, u0, cfg), &W, f, u0, cfg.mu, ns).total());
    }
    rec.at_least(id, "linearized-inverse", std::min(order(res[0], res[1]), order(res[1], res[2])), lo);
  }
  rec.at_most("linearized.dual-route", "linearized-inverse", dual, 1e-12);

  cfg.dt = 1e-2;
  std::vector<std::size_t> perm(basis.size());
  for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = perm.size() - 1 - j;
  const auto a = finish_solution(integrate_linearized(basis, W, f, u0, cfg, ns), f, &W, cfg, ns);
  const auto b = finish_solution(integrate_linearized(basis.permuted(perm), W, f, u0, cfg, ns), f, &W, cfg, ns);
  double gap = 0.0;
  for (std::size_t n = 0; n < a.samples(); ++n) gap = std::max(gap, rel(a.velocity(n), b.velocity(n), 1.0));
  rec.at_most("linearized.uniqueness", "uniqueness", gap, 1e-10);
}

void newton_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  const auto ns = navier_stokes_preset(ctx.dim);
  const GalerkinBasis basis = build_basis(grid, 1);
  SolverConfig cfg = base_solver(ctx);
  cfg.scheme = TimeScheme::imex_euler;
  cfg.T = ctx.newton_horizon;
  cfg.pressure = false;
  const auto zero = TimeDependentField::zero(grid, 1);
  const FormField u0 = taylor_green(grid);
  const GalerkinRun seed = integrate_nonlinear(basis, zero, u0, cfg, ns);
  std::mt19937_64 rng(ctx.seed + 8);

  // Frechet identity on the discrete map at eps = 1e-2.
  {
    std::normal_distribution<double> normal;
    Trajectory v(seed.coeffs.size(), Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size())));
    const FormField shape = coclosed(grid, 4, rng);
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = (1.0 + 0.1 * normal(rng)) * basis.project(shape);
    const double eps = 1e-2;
    Trajectory gp = seed.coeffs;
    for (std::size_t n = 0; n < gp.size(); ++n) gp[n] += eps * v[n];
    const auto Dp = discrete_map(basis, gp, cfg, ns);
    const auto D0 = discrete_map(basis, seed.coeffs, cfg, ns);
    const auto Dv = discrete_map_derivative(basis, seed.coeffs, v, cfg, ns);
    Trajectory defect(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) {
      defect[n] = Dp[n] - D0[n] - eps * Dv[n];
      if (n > 0) defect[n] -= eps * eps * basis.project(apply_N(basis.synthesize(v[n - 1]), ns));
    }
    const double scale = std::max(trajectory_norm(Dp, cfg.step()), trajectory_norm(D0, cfg.step()));
    rec.at_most("newton.frechet-exactness", "frechet-derivative", trajectory_norm(defect, cfg.step()) / scale, 1e-12);
  }

  const FormField r = coclosed(grid, 4, rng);
  std::vector<double> disp;
  for (double eps : {1e-3, 5e-4}) {
    const auto res = newton_local_inverse(TimeDependentField::constant(eps * r), u0, seed, cfg, ns);
    double d = 0.0;
    for (std::size_t n = 0; n < seed.coeffs.size(); ++n) d = std::max(d, (res.run.coeffs[n] - seed.coeffs[n]).norm());
    disp.push_back(d);
    if (eps == 1e-3) {
      rec.at_most("newton.final-residual", "open-mapping", res.converged ? res.residuals.back() : INFINITY, 1e-8);
      rec.at_most("newton.iterations", "open-mapping", res.iterations, 6);
    }
  }
  const double ratio = disp[1] / disp[0];
  rec.at_most("newton.displacement-ratio-deviation", "open-mapping", std::abs(ratio - 0.5), 0.1);
}

void galerkin_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, ctx.res);
  const auto ns = navier_stokes_preset(ctx.dim);
  std::mt19937_64 rng(ctx.seed + 9);
  FormField u0 = helmholtz_project(random_smooth_form(grid, 1, 2, 0.0, rng));
  u0 -= harmonic_projection(u0);
  u0 *= 2.0 / l2_norm(u0);
  SolverConfig cfg = base_solver(ctx);
  cfg.T = 0.5;
  cfg.dt = 2e-3;
  cfg.pressure = false;
  // Levels start at the data's band (|k_j| <= 2) and double.
  const std::size_t full = max_basis_size(grid, 1);
  std::size_t m = build_basis(SpectralGrid::make(ctx.dim, 6), 1).size();
  std::vector<std::size_t> sizes;
  for (; m <= full && sizes.size() < 4; m *= 2) sizes.push_back(m);
  const auto study = galerkin_convergence_study(grid, TimeDependentField::zero(grid, 1), u0, cfg, ns, sizes);
  double spread = 0.0, worst = 0.0;
  for (const auto& l : study.levels) spread = std::max(spread, l.bound1 / study.levels.back().bound1);
  for (std::size_t i = 2; i < study.levels.size(); ++i)
    worst = std::max(worst, *study.levels[i].cauchy / *study.levels[i - 1].cauchy);
  rec.flag("galerkin.uniform-bounds", "galerkin-uniform-bounds", study.uniformly_bounded);
  rec.measured("galerkin.bound-spread", "galerkin-uniform-bounds", spread);
  rec.at_most("galerkin.cauchy-ratio", "galerkin-uniform-bounds", worst, 0.5);
}

void io_group(const Context& ctx, Recorder& rec) {
  auto grid = SpectralGrid::make(ctx.dim, std::min(ctx.res, 16));
  std::mt19937_64 rng(ctx.seed + 10);
  double worst = 0.0;
  for (int deg = 0; deg <= ctx.dim; ++deg) {
    const FormField u = random_form(grid, deg, 4, rng);
    const auto bytes = encode_snapshot(u);
    worst = std::max(worst, rel(decode_snapshot(bytes), u, l2_norm(u)));
  }
  rec.at_most("plumbing.snapshot-roundtrip", "plumbing", worst, 1e-14);
  RunConfig c;
  c.solver = ctx.solver;
  c.seed = ctx.seed;
  std::stringstream ss;
  write_config(ss, c);
  const RunConfig back = parse_config(ss);
  rec.flag("plumbing.config-roundtrip", "plumbing",
           back.solver.mu == c.solver.mu && back.solver.dt == c.solver.dt && back.seed == c.seed &&
               back.solver.scheme == c.solver.scheme);
}

const std::map<std::string, std::pair<std::function<void(const Context&, Recorder&)>, std::string>>& registry() {
  static const std::map<std::string, std::pair<std::function<void(const Context&, Recorder&)>, std::string>> r = {
      {"hodge", {hodge_group, "helmholtz-projector"}},
      {"norms", {norms_group, "bochner-norms"}},
      {"gn-survey", {gn_group, "gagliardo-nirenberg"}},
      {"continuity", {continuity_group, "continuity-of-B"}},
      {"galerkin-basis", {basis_group, "galerkin-basis"}},
      {"taylor-green", {taylor_green_group, "navier-stokes-equation"}},
      {"energy", {energy_group, "energy-law"}},
      {"linearized", {linearized_group, "linearized-inverse"}},
      {"newton", {newton_group, "open-mapping"}},
      {"galerkin", {galerkin_group, "galerkin-uniform-bounds"}},
      {"io", {io_group, "plumbing"}},
  };
  return r;
}

}  // namespace

bool is_check_group(const std::string& name) { return registry().count(name) > 0; }

void run_group(const std::string& name, const Context& ctx, VerificationReport& report) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("unknown check group '" + name + "'");
  Recorder rec(report);
  try {
    it->second.first(ctx, rec);
  } catch (const DivergenceError&) {
    // Blow-up is a result, not a crash.
    rec.flag(name + ".solver-diverged", it->second.second, false);
  }
}

}  // namespace hodge::detail
