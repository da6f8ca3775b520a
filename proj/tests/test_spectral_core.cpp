#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/multi_index.hpp"
#include "hodge/random_field.hpp"
#include "hodge/transform.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::testing::rel_diff;

namespace {

double h2_norm(const FormField& u) {
  double s = 0.0;
  const auto ksq = u.grid().k_squared();
  for (int c = 0; c < u.components(); ++c) {
    const auto comp = u.component(c);
    for (std::size_t q = 0; q < comp.size(); ++q) s += (1 + ksq[q]) * (1 + ksq[q]) * std::norm(comp[q]);
  }
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("multi-index tables and incidence") {
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, 2) == 3);
  const MultiIndexTable t(3, 2);
  REQUIRE(t.size() == 3);
  CHECK(t.axes(0) == std::vector<int>{0, 1});
  CHECK(t.axes(1) == std::vector<int>{0, 2});
  CHECK(t.axes(2) == std::vector<int>{1, 2});
  // d(u dx2) on T^3 -> d1 u dx1^dx2 - d3 u dx2^dx3.
  const auto inc = exterior_incidence(3, 1);
  int found = 0;
  for (const auto& e : inc) {
    if (e.source == 1 && e.target == 0) { CHECK(e.axis == 0); CHECK(e.sign == 1); ++found; }
    if (e.source == 1 && e.target == 2) { CHECK(e.axis == 2); CHECK(e.sign == -1); ++found; }
  }
  CHECK(found == 2);
}

TEST_CASE("grid wavevectors, mirror and dealias mask") {
  const SpectralGrid g(2, 32);
  CHECK(g.size() == 1024);
  CHECK(g.k_squared(SpectralGrid::zero_mode()) == 0.0);
  int zeros = 0;
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (g.k_squared(q) == 0.0) ++zeros;
    const auto k = g.wavevector(q), km = g.wavevector(g.mirror(q));
    if (!g.nyquist(q)) { CHECK(km[0] == -k[0]); CHECK(km[1] == -k[1]); }
    const bool keep = std::abs(k[0]) * 3 <= 32 && std::abs(k[1]) * 3 <= 32;
    CHECK(g.retained(q) == keep);
  }
  CHECK(zeros == 1);
  CHECK(g.retained_count() == 21 * 21);
  CHECK_THROWS_AS(SpectralGrid(2, 31), ParameterError);
  CHECK_THROWS_AS(SpectralGrid(4, 32), ParameterError);
}

TEST_CASE("exterior derivative examples") {
  auto grid = SpectralGrid::make(2, 64);
  SUBCASE("constant 0-form") {
    FormField c(grid, 0);
    c.set_mode(0, 0, 3.5);
    CHECK(l2_norm(exterior_derivative(c)) == 0.0);
  }
  SUBCASE("d(sin x1 dx2) against a finite-difference oracle") {
    const testing::ScalarFn u1 = [](const std::array<double, 3>&) { return 0.0; };
    const testing::ScalarFn u2 = [](const std::array<double, 3>& x) { return std::sin(x[0]); };
    const FormField u = testing::sample_form(grid, 1, {u1, u2});
    const PhysicalField du = to_physical(exterior_derivative(u));
    double err = 0.0;
    for (std::size_t x = 0; x < grid->size(); ++x) {
      const auto p = sample_point(*grid, x);
      // (du)_{12} = d1 u2 - d2 u1
      const double oracle = testing::fd_partial(u2, p, 0) - testing::fd_partial(u1, p, 1);
      err = std::max(err, std::abs(du.values[x] - oracle));
    }
    CHECK(err < 1e-10);
  }
  SUBCASE("top degree is outside the domain") {
    CHECK_THROWS_AS((void)exterior_derivative(FormField(grid, 2)), DomainError);
    CHECK_THROWS_AS((void)codifferential(FormField(grid, 0)), DomainError);
  }
}

TEST_CASE("codifferential is the adjoint of d") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(11 + n);
    for (int deg = 0; deg < n; ++deg) {
      for (int trial = 0; trial < 20; ++trial) {
        const FormField u = random_form(grid, deg, 5, rng);
        const FormField v = random_form(grid, deg + 1, 5, rng);
        const double lhs = inner_product(exterior_derivative(u), v);
        const double rhs = inner_product(u, codifferential(v));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), l2_norm(u) * l2_norm(v)));
      }
    }
  }
}

TEST_CASE("codifferential examples on T^2 and T^3") {
  auto grid = SpectralGrid::make(2, 32);
  // delta(u1 dx1 + u2 dx2) = -(d1 u1 + d2 u2), checked pointwise with the FD oracle.
  const testing::ScalarFn u1 = [](const std::array<double, 3>& x) { return std::sin(x[0]) * std::cos(2 * x[1]); };
  const testing::ScalarFn u2 = [](const std::array<double, 3>& x) { return std::cos(3 * x[0] + x[1]); };
  const PhysicalField du = to_physical(codifferential(testing::sample_form(grid, 1, {u1, u2})));
  double err = 0.0;
  for (std::size_t x = 0; x < grid->size(); ++x) {
    const auto p = sample_point(*grid, x);
    err = std::max(err, std::abs(du.values[x] + testing::fd_partial(u1, p, 0) + testing::fd_partial(u2, p, 1)));
  }
  CHECK(err < 1e-9);

  FormField c(grid, 1);
  c.set_mode(0, 0, 1.0);
  c.set_mode(1, 0, -2.0);
  CHECK(l2_norm(codifferential(c)) == 0.0);

  auto g3 = SpectralGrid::make(3, 16);
  auto rng = testing::rng(5);
  const FormField beta = random_form(g3, 2, 5, rng);
  CHECK(l2_norm(codifferential(codifferential(beta))) <= 1e-12 * l2_norm(beta));
}

TEST_CASE("complex property d o d = 0 and delta o delta = 0") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(100 + n);
    for (int deg = 0; deg + 2 <= n; ++deg) {
      for (int trial = 0; trial < 100; ++trial) {
        const FormField u = random_form(grid, deg, 5, rng);
        CHECK(l2_norm(exterior_derivative(exterior_derivative(u))) <= 1e-12 * h2_norm(u));
        const FormField w = random_form(grid, deg + 2, 5, rng);
        CHECK(l2_norm(codifferential(codifferential(w))) <= 1e-12 * h2_norm(w));
      }
    }
  }
}

TEST_CASE("Hodge Laplacian: multiplier and composition agree") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, 16);
    auto rng = testing::rng(7 + n);
    for (int deg = 0; deg <= n; ++deg) {
      for (int trial = 0; trial < 10; ++trial) {
        const FormField u = random_form(grid, deg, 5, rng);
        const FormField a = hodge_laplacian(u);
        CHECK(rel_diff(a, hodge_laplacian_composed(u)) <= 1e-12);
        // (Delta u, u) = ||du||^2 + ||delta u||^2
        double rhs = 0.0;
        if (deg < n) rhs += std::pow(l2_norm(exterior_derivative(u)), 2);
        if (deg > 0) rhs += std::pow(l2_norm(codifferential(u)), 2);
        const double lhs = inner_product(a, u);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
      }
    }
  }
  auto grid = SpectralGrid::make(2, 16);
  const FormField s = testing::sample_form(grid, 0, {[](const std::array<double, 3>& x) { return std::sin(x[0]); }});
  CHECK(rel_diff(hodge_laplacian_composed(s), s) <= 1e-13);
  FormField c(grid, 1);
  c.set_mode(1, 0, 4.0);
  CHECK(l2_norm(hodge_laplacian(c)) == 0.0);
}

TEST_CASE("harmonic projection, parametrix and the identities phi Delta = Delta phi = I - Pi") {
  for (int n : {2, 3}) {
    auto grid = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(31 + n);
    for (int deg = 0; deg <= n; ++deg) {
      for (int trial = 0; trial < 20; ++trial) {
        const FormField u = random_form(grid, deg, 5, rng);
        const FormField v = random_form(grid, deg, 5, rng);
        const FormField pi_u = harmonic_projection(u);
        const FormField target = u - pi_u;
        CHECK(rel_diff(parametrix(hodge_laplacian(u)), target, l2_norm(u)) <= 1e-12);
        CHECK(rel_diff(hodge_laplacian(parametrix(u)), target, l2_norm(u)) <= 1e-12);
        CHECK(rel_diff(harmonic_projection(pi_u), pi_u) == 0.0);
        CHECK(std::abs(inner_product(pi_u, v) - inner_product(u, harmonic_projection(v))) <=
              1e-12 * l2_norm(u) * l2_norm(v));
        CHECK(l2_norm(pi_u) <= l2_norm(u));
      }
      // Rank of the image of Pi by probing.
      Eigen::MatrixXd probes(binomial(n, deg), 40);
      for (int j = 0; j < 40; ++j) {
        const FormField p = harmonic_projection(random_form(grid, deg, 3, rng));
        for (int c = 0; c < p.components(); ++c) probes(c, j) = p.at(c, 0).real();
      }
      CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(probes).rank() == binomial(n, deg));
    }
  }
  auto grid = SpectralGrid::make(2, 16);
  FormField c(grid, 1);
  c.set_mode(0, 0, 2.0);
  CHECK(rel_diff(harmonic_projection(c), c) == 0.0);
  CHECK(l2_norm(parametrix(c)) == 0.0);
  const FormField s = testing::sample_form(grid, 1, {[](const std::array<double, 3>&) { return 0.0; },
                                                     [](const std::array<double, 3>& x) { return std::sin(x[0]); }});
  CHECK(l2_norm(harmonic_projection(s)) < 1e-15);
}

TEST_CASE("fractional powers") {
  auto grid = SpectralGrid::make(2, 32);
  auto rng = testing::rng(3);
  const FormField u = random_mean_zero_form(grid, 1, 8, rng);
  CHECK(rel_diff(fractional_power(u, 2.0), hodge_laplacian(u)) <= 1e-13);
  CHECK(rel_diff(fractional_power(fractional_power(u, 1.5), 0.5), fractional_power(u, 2.0)) <= 1e-13);
  CHECK(rel_diff(fractional_power(fractional_power(u, 0.7), 1.1), fractional_power(u, 1.8)) <= 1e-13);
  const FormField w = random_form(grid, 1, 8, rng);
  CHECK(rel_diff(fractional_power(w, 0.0), w - harmonic_projection(w)) == 0.0);
  const FormField s = testing::sample_form(grid, 0, {[](const std::array<double, 3>& x) { return std::sin(x[0]); }});
  CHECK(rel_diff(fractional_power(s, 1.0), s) <= 1e-14);
  CHECK_THROWS_AS((void)fractional_power(s, -0.5), DomainError);
}

TEST_CASE("tilde nabla") {
  auto grid = SpectralGrid::make(2, 32);
  auto rng = testing::rng(4);
  const FormField u = random_form(grid, 1, 8, rng);
  const auto t2 = tilde_nabla(u, 2);
  REQUIRE(t2.even);
  CHECK(rel_diff(*t2.even, hodge_laplacian(u)) <= 1e-13);
  const auto t1 = tilde_nabla(u, 1);
  REQUIRE(t1.exact);
  REQUIRE(t1.coexact);
  const double lhs = std::pow(l2_norm(*t1.exact), 2) + std::pow(l2_norm(*t1.coexact), 2);
  const double rhs = std::pow(l2_norm(fractional_power(u, 1.0)), 2);
  CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);

  FormField c(grid, 1);
  c.set_mode(0, 0, 1.0);
  const auto tc = tilde_nabla(c, 1);
  CHECK(l2_norm(*tc.exact) == 0.0);
  CHECK(l2_norm(*tc.coexact) == 0.0);
  // Ends of the complex: only one part exists.
  CHECK_FALSE(tilde_nabla(FormField(grid, 0), 3).coexact);
  CHECK_FALSE(tilde_nabla(FormField(grid, 2), 3).exact);
  CHECK_THROWS_AS((void)tilde_nabla(u, 0), DomainError);
}

TEST_CASE("inner product") {
  auto grid = SpectralGrid::make(2, 128);
  const testing::ScalarFn s = [](const std::array<double, 3>& x) { return std::sin(x[0]); };
  const FormField u = testing::sample_form(grid, 0, {s});
  // Quadrature oracle: grid mean of sin^2.
  double quad = 0.0;
  for (std::size_t x = 0; x < grid->size(); ++x) quad += std::pow(s(sample_point(*grid, x)), 2);
  quad /= static_cast<double>(grid->size());
  CHECK(inner_product(u, u) == doctest::Approx(quad).epsilon(1e-14));
  CHECK(inner_product(u, u) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(inner_product(FormField(grid, 0), FormField(grid, 0)) == 0.0);
  CHECK_THROWS_AS((void)inner_product(u, FormField(grid, 1)), UsageError);
  CHECK_THROWS_AS((void)inner_product(u, FormField(SpectralGrid::make(2, 64), 0)), UsageError);
}

TEST_CASE("physical transforms") {
  auto grid = SpectralGrid::make(3, 16);
  auto rng = testing::rng(9);
  const FormField u = random_form(grid, 2, 5, rng);
  CHECK(rel_diff(from_physical(to_physical(u)), u) < 1e-13);

  FormField c(grid, 0);
  c.set_mode(0, 0, 1.25);
  for (double v : to_physical(c).values) CHECK(v == doctest::Approx(1.25).epsilon(1e-15));

  auto g2 = SpectralGrid::make(2, 16);
  FormField s(g2, 0);
  const std::array<int, 2> k1{1, 0};
  s.set_mode(0, g2->index_of(k1), cplx(0.0, -0.5));  // sin x1
  const PhysicalField ps = to_physical(s);
  for (std::size_t x = 0; x < g2->size(); ++x)
    CHECK(ps.values[x] == doctest::Approx(std::sin(sample_point(*g2, x)[0])).epsilon(1e-14));

  FormField bad(g2, 0);
  bad.at(0, g2->index_of(k1)) = 1.0;  // mirror left empty
  CHECK_THROWS_AS((void)to_physical(bad), IntegrityError);
}

TEST_CASE("random fields are reproducible and resolution independent") {
  auto g32 = SpectralGrid::make(2, 32);
  auto g64 = SpectralGrid::make(2, 64);
  auto r1 = testing::rng(77), r2 = testing::rng(77);
  const FormField a = random_form(g32, 1, 6, r1);
  const FormField b = random_form(g64, 1, 6, r2);
  CHECK(a.hermitian_defect() == 0.0);
  CHECK(l2_norm(a) == doctest::Approx(l2_norm(b)).epsilon(1e-15));
  const std::array<int, 2> k{3, -2};
  CHECK(a.at(1, g32->index_of(k)) == b.at(1, g64->index_of(k)));
}
