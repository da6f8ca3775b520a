#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/hodge_operators.hpp"
#include "hodge/nonlinearity.hpp"
#include "hodge/random_field.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::testing::rel_diff;
using Pt = std::array<double, 3>;

TEST_CASE("N vanishes at zero and on harmonic fields") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, 16);
    const auto cfg = navier_stokes_preset(n);
    CHECK(l2_norm(apply_N(FormField(grid, 1), cfg)) == 0.0);
    FormField c(grid, 1);
    for (int a = 0; a < n; ++a) c.at(a, grid->zero_mode()) = 0.3 * (a + 1);
    CHECK(l2_norm(apply_N(c, cfg)) <= 1e-15);
    auto rng = testing::rng(7);
    CHECK(l2_norm(apply_N(random_form(grid, 1, 4, rng), zero_preset(n, 1))) == 0.0);
  }
}

TEST_CASE("Navier-Stokes preset equals (u . grad) u against finite differences") {
  auto grid = SpectralGrid::make(2, 64);
  const testing::ScalarFn u0 = [](const Pt& x) { return std::sin(x[0]) * std::cos(2 * x[1]) + 0.5 * std::cos(x[1]); };
  const testing::ScalarFn u1 = [](const Pt& x) { return std::cos(3 * x[0]) * std::sin(x[1]) - 0.2; };
  const FormField u = testing::sample_form(grid, 1, {u0, u1});
  const std::vector<testing::ScalarFn> comps = {u0, u1};
  std::vector<testing::ScalarFn> conv;
  for (int b = 0; b < 2; ++b) {
    conv.push_back([&comps, b](const Pt& x) {
      double s = 0.0;
      for (int a = 0; a < 2; ++a) s += comps[a](x) * testing::fd_partial(comps[b], x, a);
      return s;
    });
  }
  const FormField oracle = testing::sample_form(grid, 1, conv);
  const auto cfg = navier_stokes_preset(2);
  CHECK(rel_diff(apply_N(u, cfg), oracle) <= 1e-8);
  CHECK(rel_diff(convective_derivative(u, u), oracle) <= 1e-8);
}

TEST_CASE("Navier-Stokes preset on T^3 matches the convective form") {
  auto grid = SpectralGrid::make(3, 16);
  auto rng = testing::rng(11);
  const auto cfg = navier_stokes_preset(3);
  for (int t = 0; t < 5; ++t) {
    const FormField u = random_form(grid, 1, 3, rng);
    CHECK(rel_diff(apply_N(u, cfg), convective_derivative(u, u)) <= 1e-12);
  }
}

TEST_CASE("Algebraic identities of N and B") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(20 + n);
    for (int deg = 0; deg <= n; ++deg) {
      for (const auto& cfg : {random_preset(n, deg, 3), deg == 1 ? navier_stokes_preset(n) : zero_preset(n, deg)}) {
        const FormField v = random_form(grid, deg, 3, rng);
        const FormField w = random_form(grid, deg, 3, rng);
        const FormField z = random_form(grid, deg, 3, rng);
        const FormField Nv = apply_N(v, cfg);
        const double scale = std::max(l2_norm(Nv), 1e-300);
        CHECK(rel_diff(apply_N(3.0 * v, cfg), 9.0 * Nv, 9.0 * scale) <= 1e-12);
        CHECK(rel_diff(apply_B(v, v, cfg), 2.0 * Nv, 2.0 * scale) <= 1e-12);
        CHECK(l2_norm(apply_B(w, FormField(grid, deg), cfg)) == 0.0);
        const FormField lin = apply_B(w, 2.0 * v - 0.5 * z, cfg);
        const FormField ref = 2.0 * apply_B(w, v, cfg) - 0.5 * apply_B(w, z, cfg);
        CHECK(rel_diff(lin, ref, std::max(l2_norm(ref), 1e-300)) <= 1e-12);
        CHECK(rel_diff(apply_B(w, v, cfg), apply_B(v, w, cfg), std::max(l2_norm(apply_B(w, v, cfg)), 1e-300)) <= 1e-12);
        // N(u + eps v) = N(u) + eps B(u, v) + eps^2 N(v)
        const double eps = 1e-3;
        const FormField lhs = apply_N(w + eps * v, cfg);
        const FormField rhs = apply_N(w, cfg) + eps * apply_B(w, v, cfg) + (eps * eps) * Nv;
        CHECK(rel_diff(lhs, rhs, std::max(l2_norm(lhs), 1e-300)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("operator_bound bounds the pointwise product") {
  for (int n : {2, 3}) {
    for (int deg = 0; deg < n; ++deg) {
      const auto cfg = random_preset(n, deg, 100 + deg);
      const BilinearMap& m = *cfg.m1;
      const double cm = m.operator_bound();
      const auto terms = m.entries();
      auto rng = testing::rng(5);
      std::normal_distribution<double> normal;
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(m.source1_components()), b(m.source2_components()), out(m.target_components(), 0.0);
        for (auto& x : a) x = normal(rng);
        for (auto& x : b) x = normal(rng);
        kernels::serial::contract(terms, a, b, out, 1);
        double na = 0, nb = 0, no = 0;
        for (double x : a) na += x * x;
        for (double x : b) nb += x * x;
        for (double x : out) no += x * x;
        CHECK(std::sqrt(no) <= cm * std::sqrt(na * nb) * (1 + 1e-12));
      }
    }
  }
  // Interior product with a 2-form has spectral norm 1 in 2D.
  CHECK(navier_stokes_preset(2).m1->operator_bound() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dealiased products agree between res and 2 res") {
  for (int n : {2, 3}) {
    const int res = n == 2 ? 32 : 16;
    auto coarse = SpectralGrid::make(n, res);
    auto fine = SpectralGrid::make(n, 2 * res);
    const int band = coarse->dealias_cutoff();
    auto r1 = testing::rng(9), r2 = testing::rng(9);
    const FormField uc = random_form(coarse, 1, band, r1);
    const FormField uf = random_form(fine, 1, band, r2);
    const auto cfg = navier_stokes_preset(n);
    const FormField Nc = apply_N(uc, cfg);
    const FormField Nf = apply_N(uf, cfg);
    double worst = 0.0;
    std::array<int, 3> k{};
    for (std::size_t m = 0; m < coarse->size(); ++m) {
      if (!coarse->retained(m)) continue;
      for (int a = 0; a < n; ++a) k[a] = coarse->k(m, a);
      const std::size_t mf = fine->index_of(std::span<const int>(k.data(), n));
      for (int c = 0; c < n; ++c) worst = std::max(worst, std::abs(Nc.at(c, m) - Nf.at(c, mf)));
    }
    CHECK(worst <= 1e-12 * Nc.max_abs());
  }
}

TEST_CASE("empirical continuity bound") {
  auto g32 = SpectralGrid::make(2, 32);
  auto g64 = SpectralGrid::make(2, 64);
  const auto cfg = navier_stokes_preset(2);
  CHECK(empirical_continuity_bound(zero_preset(2, 1), g32, 5, 0, 1, 4, 1).max_ratio == 0.0);
  const auto a = empirical_continuity_bound(cfg, g32, 20, 0, 1, 6, 42);
  const auto b = empirical_continuity_bound(cfg, g64, 20, 0, 1, 6, 42);
  CHECK(a.trials == 20);
  CHECK(a.max_ratio > 0.0);
  CHECK(a.mean_ratio <= a.max_ratio);
  CHECK(std::abs(a.max_ratio - b.max_ratio) <= 0.15 * a.max_ratio);
  CHECK_THROWS_AS((void)empirical_continuity_bound(cfg, g32, 5, 0, 0, 4, 1), ParameterError);
}

TEST_CASE("trilinear form vanishes for divergence-free transport") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(60 + n);
    const auto cfg = navier_stokes_preset(n);
    for (int t = 0; t < 10; ++t) {
      const FormField w = helmholtz_project(random_form(grid, 1, grid->dealias_cutoff(), rng));
      const FormField u = random_form(grid, 1, grid->dealias_cutoff(), rng);
      const auto r = trilinear_form(w, u, cfg);
      REQUIRE(r.convective.has_value());
      const double scale = l2_norm(w) * l2_norm(u) * l2_norm(u);
      CHECK(std::abs(*r.convective) <= 1e-10 * scale);
      const auto z = trilinear_form(FormField(grid, 1), u, cfg);
      CHECK(z.raw == 0.0);
      CHECK(*z.convective == 0.0);
    }
  }
  auto grid = SpectralGrid::make(2, 16);
  auto rng = testing::rng(1);
  const FormField u = random_form(grid, 1, 3, rng);
  CHECK_FALSE(trilinear_form(u, u, random_preset(2, 1, 2)).convective.has_value());
}

TEST_CASE("bilinear map text format") {
  const auto cfg = random_preset(3, 1, 77);
  std::stringstream ss;
  cfg.m1->write(ss);
  const BilinearMap back = BilinearMap::parse(ss);
  CHECK(back.dim() == 3);
  CHECK(back.source1_degree() == 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(back.get(a, b, c) == cfg.m1->get(a, b, c));

  std::istringstream commented("# interior product\nbilinear 2 2 1 1\n0 0 1 1.0  # u_x w_xy\n0 1 0 -1\n");
  const BilinearMap m = BilinearMap::parse(commented);
  CHECK(m.get(0, 0, 1) == 1.0);
  CHECK(m.get(0, 1, 0) == -1.0);

  std::istringstream bad_header("matrix 2 1 1 0\n");
  CHECK_THROWS_AS((void)BilinearMap::parse(bad_header), UsageError);
  std::istringstream bad_entry("bilinear 2 1 1 0\n0 0 x\n");
  CHECK_THROWS_AS((void)BilinearMap::parse(bad_entry), UsageError);
  std::istringstream out_of_range("bilinear 2 1 1 0\n5 0 0 1\n");
  CHECK_THROWS_AS((void)BilinearMap::parse(out_of_range), UsageError);
}

TEST_CASE("configuration validation and presets by name") {
  CHECK_NOTHROW(navier_stokes_preset(3).validate());
  CHECK(preset_by_name("navier-stokes", 2, 1).preset == "navier-stokes-i1");
  CHECK(preset_by_name("zero", 3, 2).is_zero());
  CHECK(preset_by_name("random:5", 2, 0).m1.has_value());
  CHECK_FALSE(preset_by_name("random:5", 2, 0).m2.has_value());
  CHECK_THROWS_AS((void)preset_by_name("navier-stokes", 2, 2), UsageError);
  CHECK_THROWS_AS((void)preset_by_name("bogus", 2, 1), UsageError);
  NonlinearityConfig bad = navier_stokes_preset(2);
  bad.m1 = BilinearMap(2, 1, 1, 1);
  CHECK_THROWS_AS(bad.validate(), UsageError);
}
