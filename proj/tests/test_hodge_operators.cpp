#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hodge/errors.hpp"
#include "hodge/hodge_operators.hpp"
#include "hodge/random_field.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::testing::rel_diff;
using Pt = std::array<double, 3>;

TEST_CASE("Helmholtz projector: idempotent, self-adjoint, orthogonal complement, coclosed") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    const TorusDeRham cx(n);
    auto rng = testing::rng(200 + n);
    for (int deg = 0; deg <= n; ++deg) {
      for (int trial = 0; trial < 25; ++trial) {
        const FormField u = random_form(grid, deg, 5, rng);
        const FormField v = random_form(grid, deg, 5, rng);
        const double nu = l2_norm(u);
        const FormField Pu = helmholtz_project(u, cx);
        CHECK(rel_diff(helmholtz_project(Pu, cx), Pu, nu) <= 1e-12);
        CHECK(rel_diff(helmholtz_project_complement(u, cx), Pu, nu) <= 1e-12);
        CHECK(std::abs(inner_product(Pu, v) - inner_product(u, helmholtz_project(v, cx))) <= 1e-12 * nu * l2_norm(v));
        CHECK(std::abs(inner_product(Pu, u - Pu)) <= 1e-12 * nu * nu);
        if (deg > 0) CHECK(l2_norm(codifferential(Pu)) <= 1e-12 * l2_norm(codifferential(u)) + 1e-14 * nu);
      }
    }
  }
}

TEST_CASE("Helmholtz projector on gradient and curl fields of T^2") {
  auto grid = SpectralGrid::make(2, 32);
  // grad(sin x cos 2y) is exact; (d_y psi, -d_x psi) is divergence free.
  const FormField grad = testing::sample_form(
      grid, 1, {[](const Pt& x) { return std::cos(x[0]) * std::cos(2 * x[1]); },
                [](const Pt& x) { return -2 * std::sin(x[0]) * std::sin(2 * x[1]); }});
  const FormField curl = testing::sample_form(
      grid, 1, {[](const Pt& x) { return -3 * std::cos(x[0]) * std::sin(3 * x[1]); },
                [](const Pt& x) { return std::sin(x[0]) * std::cos(3 * x[1]); }});
  CHECK(l2_norm(helmholtz_project(grad)) <= 1e-12 * l2_norm(grad));
  CHECK(rel_diff(helmholtz_project(curl), curl) <= 1e-12);
}

TEST_CASE("Hodge decomposition") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(300 + n);
    for (int deg = 0; deg <= n; ++deg) {
      for (int trial = 0; trial < 25; ++trial) {
        const FormField u = random_form(grid, deg, 5, rng);
        const auto h = hodge_decompose(u);
        const double nu2 = inner_product(u, u);
        CHECK(rel_diff(h.reconstruct(), u) <= 1e-12);
        CHECK(std::abs(inner_product(h.exact, h.coexact)) <= 1e-12 * nu2);
        CHECK(std::abs(inner_product(h.exact, h.harmonic)) <= 1e-12 * nu2);
        CHECK(std::abs(inner_product(h.coexact, h.harmonic)) <= 1e-12 * nu2);
        const double pyth = inner_product(h.exact, h.exact) + inner_product(h.coexact, h.coexact) +
                            inner_product(h.harmonic, h.harmonic);
        CHECK(std::abs(pyth - nu2) <= 1e-12 * nu2);
      }
    }
  }
  auto grid = SpectralGrid::make(3, 16);
  FormField c(grid, 1);
  c.set_mode(2, 0, 1.5);
  const auto hc = hodge_decompose(c);
  CHECK(l2_norm(hc.exact) == 0.0);
  CHECK(l2_norm(hc.coexact) == 0.0);
  CHECK(rel_diff(hc.harmonic, c) == 0.0);

  auto rng = testing::rng(9);
  const FormField alpha = random_form(grid, 1, 5, rng);
  const FormField da = exterior_derivative(alpha);
  const auto hd = hodge_decompose(da);
  CHECK(rel_diff(hd.exact, da) <= 1e-12);
  CHECK(l2_norm(hd.coexact) <= 1e-12 * l2_norm(da));
  CHECK(l2_norm(hd.harmonic) <= 1e-12 * l2_norm(da));
}

TEST_CASE("pressure recovery") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, 16);
    auto rng = testing::rng(400 + n);
    for (int deg = 1; deg <= n; ++deg) {
      for (int trial = 0; trial < 10; ++trial) {
        // Mean-zero coclosed q of degree deg-1.
        FormField q = random_mean_zero_form(grid, deg - 1, 5, rng);
        if (deg - 1 > 0) q = helmholtz_project(q) - harmonic_projection(q);
        const FormField F = exterior_derivative(q);
        const FormField p = recover_pressure(F);
        CHECK(rel_diff(p, q) <= 1e-12);
        CHECK(rel_diff(exterior_derivative(p), F) <= 1e-12);
        CHECK(l2_norm(harmonic_projection(p)) <= 1e-14 * l2_norm(p));
        if (deg > 1) CHECK(l2_norm(codifferential(p)) <= 1e-12 * l2_norm(F));
      }
    }
  }
  auto grid = SpectralGrid::make(2, 32);
  CHECK(l2_norm(recover_pressure(FormField(grid, 1))) == 0.0);

  // F = grad(cos x cos y) recovers cos x cos y.
  const FormField F = testing::sample_form(
      grid, 1, {[](const Pt& x) { return -std::sin(x[0]) * std::cos(x[1]); },
                [](const Pt& x) { return -std::cos(x[0]) * std::sin(x[1]); }});
  const FormField expected = testing::sample_form(grid, 0, {[](const Pt& x) { return std::cos(x[0]) * std::cos(x[1]); }});
  CHECK(rel_diff(recover_pressure(F), expected) < 1e-12);

  auto rng = testing::rng(1);
  const FormField not_exact = random_mean_zero_form(grid, 1, 5, rng);
  CHECK_THROWS_AS((void)recover_pressure(not_exact), ConsistencyError);
  CHECK_THROWS_AS((void)recover_pressure(FormField(grid, 0)), DomainError);
}
