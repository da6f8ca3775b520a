// Command-line front end: solvers, single check groups and the full suite.
// Every subcommand writes summary.json (and CSVs) into --out.
#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>

#include "hodge/config.hpp"
#include "hodge/errors.hpp"
#include "hodge/experiments.hpp"
#include "hodge/hodge_operators.hpp"
#include "hodge/kernels.hpp"
#include "hodge/nonlinearity.hpp"
#include "hodge/output.hpp"
#include "hodge/random_field.hpp"
#include "hodge/sobolev.hpp"
#include "hodge/solver.hpp"
#include "hodge/transform.hpp"

using namespace hodge;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = "hodge_out";
  std::optional<int> res, dim;
  std::optional<double> dt, mu, T;
  std::optional<std::string> preset;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "key = value run configuration")->check(CLI::ExistingFile);
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--out", c.out, "output directory")->capture_default_str();
  app->add_option("--res", c.res, "grid points per axis");
  app->add_option("--dim", c.dim, "torus dimension (2 or 3)");
  app->add_option("--dt", c.dt, "time step");
  app->add_option("--mu", c.mu, "viscosity");
  app->add_option("-T,--horizon", c.T, "final time");
  app->add_option("--preset", c.preset, "nonlinearity preset: navier-stokes-i1, zero, random[:seed]");
}

RunConfig resolve(const Common& c) {
  RunConfig cfg = c.config.empty() ? RunConfig{} : load_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (c.res) cfg.solver.res = *c.res;
  if (c.dim) cfg.solver.dim = *c.dim;
  if (c.dt) cfg.solver.dt = *c.dt;
  if (c.mu) cfg.solver.mu = *c.mu;
  if (c.T) cfg.solver.T = *c.T;
  if (c.preset) cfg.preset = *c.preset;
  cfg.solver.validate();
  return cfg;
}

fs::path out_dir(const Common& c) {
  fs::create_directories(c.out);
  return c.out;
}

int finish(const VerificationReport& r, const fs::path& dir) {
  r.write_json(dir / "summary.json");
  for (const auto& c : r.checks())
    std::cout << status_name(c.status) << "  " << c.id << "  value=" << c.value << "  tol=" << c.tol << '\n';
  std::cout << "summary: " << (dir / "summary.json").string() << '\n';
  return r.passed() ? 0 : 1;
}

// Taylor-Green vortex on T^n (third component zero in 3D).
FormField taylor_green(const GridPtr& grid) {
  PhysicalField f{grid, 1, std::vector<double>(static_cast<std::size_t>(grid->dim()) * grid->size(), 0.0)};
  for (std::size_t x = 0; x < grid->size(); ++x) {
    const auto p = sample_point(*grid, x);
    f.values[x] = std::sin(p[0]) * std::cos(p[1]);
    f.values[grid->size() + x] = -std::cos(p[0]) * std::sin(p[1]);
  }
  return from_physical(f);
}

FormField random_coclosed(const GridPtr& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FormField u = helmholtz_project(random_smooth_form(grid, 1, 4, 2.0, rng));
  u -= harmonic_projection(u);
  return (1.0 / l2_norm(u)) * u;
}

void solution_outputs(const TimeSeriesSolution& sol, const fs::path& dir, std::size_t stride, VerificationReport& r) {
  write_solution(dir / "solution", sol, stride);
  PlotData pd;
  pd.solution = &sol;
  emit_plot_data(dir, pd, {"energy", "grad-energy"});
  double div = 0.0;
  for (const auto& u : sol.velocity()) div = std::max(div, l2_norm(codifferential(u)));
  r.add({"solution.max-divergence", "divergence-free", CheckStatus::measured, div, 0.0, 0.0});
  r.add({"solution.final-energy", "energy-law", CheckStatus::measured, inner_product(sol.velocity().back(), sol.velocity().back()), 0.0, 0.0});
}

}  // namespace

int main(int argc, char** argv) {
  kernels::configure_threads();

  CLI::App app{"Spectral Hodge theory and Galerkin Navier-Stokes on flat tori"};
  app.require_subcommand(1);
  Common c;
  std::string init = "taylor-green";
  std::size_t stride = 100;
  std::string experiment = "all";
  int fields = 1000, band = 6;
  double eps = 1e-3;

  auto* lin = app.add_subcommand("solve-linear", "linearized problem about the Taylor-Green flow, random forcing");
  auto* nl = app.add_subcommand("solve-nonlinear", "nonlinear problem with f = 0");
  for (auto* s : {lin, nl}) {
    add_common(s, c);
    s->add_option("--init", init, "initial datum: taylor-green or random")
        ->check(CLI::IsMember({"taylor-green", "random"}))->capture_default_str();
    s->add_option("--stride", stride, "snapshot every n-th step")->check(CLI::PositiveNumber)->capture_default_str();
  }
  auto* ver = app.add_subcommand("verify", "run the verification suite or one experiment preset");
  add_common(ver, c);
  ver->add_option("--experiment", experiment, "experiment preset")
      ->check(CLI::IsMember(experiment_presets()))->capture_default_str();
  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge, projector and complex identities");
  add_common(hodge_cmd, c);
  auto* norms = app.add_subcommand("norms", "Sobolev and Bochner norm checks");
  add_common(norms, c);
  auto* gn = app.add_subcommand("gn-survey", "Gagliardo-Nirenberg ratio survey on T^3 (||v||_6 vs ||v||_{1,2})");
  add_common(gn, c);
  gn->add_option("--fields", fields, "random fields")->check(CLI::PositiveNumber)->capture_default_str();
  gn->add_option("--band", band, "coefficient band |k_j| <= band")->check(CLI::PositiveNumber)->capture_default_str();
  auto* newton = app.add_subcommand("newton", "Newton local inversion about the Taylor-Green solution");
  add_common(newton, c);
  newton->add_option("--eps", eps, "forcing perturbation size")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = resolve(c);
    const fs::path dir = out_dir(c);
    std::ofstream(dir / "config.txt") << [&] {
      std::ostringstream os;
      write_config(os, cfg);
      return os.str();
    }();

    if (*ver) {
      if (experiment == "all") return finish(verify_all(cfg.seed, {cfg.solver.dim, cfg.solver.res}), dir);
      return finish(run_experiment(make_experiment(experiment, cfg)), dir);
    }
    if (*hodge_cmd || *norms) {
      const ExperimentSpec spec{*hodge_cmd ? "hodge" : "norms", cfg, {*hodge_cmd ? "hodge" : "norms"}, std::nullopt};
      return finish(run_experiment(spec), dir);
    }

    const auto ns = preset_by_name(cfg.preset, cfg.solver.dim, 1);
    if (*lin || *nl) {
      auto grid = SpectralGrid::make(cfg.solver.dim, cfg.solver.res);
      const FormField u0 = init == "taylor-green" ? taylor_green(grid) : random_coclosed(grid, cfg.seed);
      VerificationReport r(*lin ? "solve-linear" : "solve-nonlinear", cfg.seed);
      SolverConfig sc = cfg.solver;
      sc.degree = 1;
      if (*lin) {
        const FormField tg = taylor_green(grid);
        const double rate = 2.0 * sc.mu;
        const auto w = TimeDependentField::exponential(tg, rate);
        std::mt19937_64 rng(cfg.seed + 1);
        const auto f = TimeDependentField::constant(random_smooth_form(grid, 1, 3, 2.0, rng));
        solution_outputs(solve_linearized(w, f, u0, sc, ns), dir, stride, r);
      } else {
        solution_outputs(solve_nonlinear(TimeDependentField::zero(grid, 1), u0, sc, ns), dir, stride, r);
      }
      return finish(r, dir);
    }
    if (*gn) {
      auto grid = SpectralGrid::make(3, c.res.value_or(32));
      const GagliardoNirenbergIndices idx{0, 1, 6.0, 2.0, 2.0};
      std::mt19937_64 rng(cfg.seed);
      PlotData pd;
      for (int t = 0; t < fields; ++t)
        pd.gn_ratios.push_back(gagliardo_nirenberg_check(random_form(grid, 0, band, rng), idx).ratio);
      emit_plot_data(dir, pd, {"gn-ratios"});
      VerificationReport r("gn-survey", cfg.seed);
      const double mx = *std::max_element(pd.gn_ratios.begin(), pd.gn_ratios.end());
      r.add({"gn.exponent", "gagliardo-nirenberg", CheckStatus::measured, interpolation_exponent(3, idx), 0.0, 0.0});
      r.add({"gn.max-ratio", "gagliardo-nirenberg", CheckStatus::measured, mx, 0.0, 0.0});
      r.add({"gn.finite", "gagliardo-nirenberg", std::isfinite(mx) ? CheckStatus::pass : CheckStatus::fail, mx, 0.0, 0.0});
      return finish(r, dir);
    }
    if (*newton) {
      auto grid = SpectralGrid::make(cfg.solver.dim, cfg.solver.res);
      SolverConfig sc = cfg.solver;
      sc.degree = 1;
      sc.scheme = TimeScheme::imex_euler;
      sc.pressure = false;
      const GalerkinBasis basis = build_basis(grid, 1, sc.basis_size);
      const FormField u0 = taylor_green(grid);
      const GalerkinRun seed = integrate_nonlinear(basis, TimeDependentField::zero(grid, 1), u0, sc, ns);
      const auto res = newton_local_inverse(TimeDependentField::constant(eps * random_coclosed(grid, cfg.seed)), u0,
                                            seed, sc, ns);
      PlotData pd;
      pd.newton_residuals = res.residuals;
      emit_plot_data(dir, pd, {"newton-residuals"});
      VerificationReport r("newton", cfg.seed);
      r.add({"newton.converged", "open-mapping", res.converged ? CheckStatus::pass : CheckStatus::fail,
             res.residuals.empty() ? NAN : res.residuals.back(), sc.newton.tol, 0.0});
      r.add({"newton.iterations", "open-mapping", CheckStatus::measured, static_cast<double>(res.iterations), 0.0, 0.0});
      return finish(r, dir);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
