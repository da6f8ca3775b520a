#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hodge/bochner.hpp"
#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/random_field.hpp"
#include "hodge/sobolev.hpp"
#include "test_support.hpp"

using namespace hodge;
using Pt = std::array<double, 3>;

namespace {

FormField sine_x1(const GridPtr& g) {
  return testing::sample_form(g, 0, {[](const Pt& x) { return std::sin(x[0]); }});
}

// u(t) = e^{-t} sin x1 sampled on [0, 1] with exact derivative cache.
TimeSeriesSolution decaying_sine(const GridPtr& g, int steps, int order) {
  const FormField s = sine_x1(g);
  std::vector<double> t;
  std::vector<FormField> u;
  std::vector<std::vector<FormField>> du(order);
  for (int n = 0; n <= steps; ++n) {
    const double tn = static_cast<double>(n) / steps;
    t.push_back(tn);
    u.push_back(std::exp(-tn) * s);
    for (int j = 1; j <= order; ++j) du[j - 1].push_back((j % 2 ? -1.0 : 1.0) * std::exp(-tn) * s);
  }
  TimeSeriesSolution sol(t, u);
  sol.set_derivatives(du);
  return sol;
}

}  // namespace

TEST_CASE("nabla norm examples") {
  auto g = SpectralGrid::make(2, 32);
  FormField c(g, 1);
  c.set_mode(0, 0, 3.0);
  c.set_mode(1, 0, -4.0);
  for (double p : {1.5, 2.0, 4.0, kInfinity})
    for (double s : {0.0, 1.0, 2.5}) CHECK(nabla_norm(c, {s, p}) == doctest::Approx(5.0).epsilon(1e-14));

  const FormField u = sine_x1(g);
  CHECK(nabla_norm(u, {2.0, 2.0}) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(nabla_norm(u, {2.0, 2.0}) == doctest::Approx(lp_norm(hodge_laplacian(u), 2.0)).epsilon(1e-14));

  auto rng = testing::rng(21);
  const FormField r = random_form(g, 1, 8, rng);
  CHECK(nabla_norm(r, {0.0, 2.0}) == doctest::Approx(l2_norm(r)).epsilon(1e-12));
  CHECK_THROWS_AS((void)nabla_norm(r, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS((void)nabla_norm(r, {-1.0, 2.0}), DomainError);
}

TEST_CASE("p = 2 norms: quadrature and Parseval agree; tilde equals nabla") {
  for (int n : {2, 3}) {
    auto g = SpectralGrid::make(n, n == 2 ? 32 : 16);
    auto rng = testing::rng(50 + n);
    for (int deg = 0; deg <= n; ++deg) {
      for (int trial = 0; trial < 5; ++trial) {
        const FormField u = random_form(g, deg, 5, rng);
        for (double s : {0.0, 0.5, 1.0, 3.0}) {
          CHECK(nabla_norm(u, {s, 2.0}) == doctest::Approx(nabla_norm_spectral(u, s)).epsilon(1e-10));
        }
        for (int m = 1; m <= 6; ++m) {
          const double a = tilde_norm(u, m, 2.0), b = nabla_norm_spectral(u, m);
          CHECK(std::abs(a - b) <= 1e-12 * b);
        }
      }
    }
  }
}

TEST_CASE("tilde norm on harmonic forms and the even case") {
  auto g = SpectralGrid::make(3, 16);
  FormField c(g, 2);
  c.set_mode(1, 0, 2.0);
  for (int m = 1; m <= 4; ++m)
    for (double p : {1.5, 3.0}) CHECK(tilde_norm(c, m, p) == doctest::Approx(lp_norm(c, p)).epsilon(1e-14));
  auto rng = testing::rng(8);
  const FormField u = random_form(g, 1, 4, rng);
  const double p = 3.0;
  const double expected =
      std::pow(std::pow(lp_norm(hodge_laplacian(u), p), p) + std::pow(lp_norm(harmonic_projection(u), p), p), 1 / p);
  CHECK(tilde_norm(u, 2, p) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("Bochner norm: stationary harmonic field") {
  // Index set for k = 0, s = 1: (m, j) in {(0,0), (1,0), (2,0), (0,1)}, l = 0.
  // On u(t) = c only the sup term with D^0 = I survives: |c|^2.
  auto g = SpectralGrid::make(2, 16);
  FormField c(g, 1);
  c.set_mode(0, 0, 1.0);
  c.set_mode(1, 0, 2.0);
  const auto sol = stationary_series(c, 1.0, 1);
  CHECK(bochner_norm_squared(sol, {0, 1, BochnerRole::velocity}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(bochner_norm_squared(stationary_series(c, 1.0, 2), {2, 2, BochnerRole::force}) ==
        doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("Bochner norm: e^{-t} sin x1 against closed-form time integrals") {
  auto g = SpectralGrid::make(2, 16);
  const auto sol = decaying_sine(g, 1000, 1);
  // Four (m, j) pairs, each contributing sup = 1/2 and int_0^1 e^{-2t}/2 dt.
  const double exact = 4.0 * (0.5 + (1.0 - std::exp(-2.0)) / 4.0);
  CHECK(std::abs(bochner_norm_squared(sol, {0, 1, BochnerRole::velocity}) - exact) <= 1e-6 * exact);

  // k = 1 doubles the terms (|k| = 1 makes every D^sigma the identity on sin x1).
  CHECK(std::abs(bochner_norm_squared(sol, {1, 1, BochnerRole::velocity}) - 2 * exact) <= 1e-6 * exact);

  const FormField zero(g, 0);
  CHECK(bochner_norm(stationary_series(zero, 1.0, 2), {1, 2, BochnerRole::velocity}) == 0.0);
}

TEST_CASE("Bochner norm converges at second order under time refinement") {
  auto g = SpectralGrid::make(2, 16);
  const double exact = 4.0 * (0.5 + (1.0 - std::exp(-2.0)) / 4.0);
  double prev = -1.0;
  for (int steps : {10, 20, 40, 80}) {
    const double err = std::abs(bochner_norm_squared(decaying_sine(g, steps, 1), {0, 1}) - exact);
    if (prev > 0.0) CHECK(std::log2(prev / err) >= 1.95);
    prev = err;
  }
}

TEST_CASE("Bochner norm: pressure role and cache errors") {
  auto g = SpectralGrid::make(2, 16);
  auto sol = decaying_sine(g, 10, 0);
  CHECK_THROWS_AS((void)bochner_norm(sol, {0, 1, BochnerRole::velocity}), UsageError);
  CHECK_THROWS_AS((void)bochner_norm(sol, {0, 0, BochnerRole::pressure}), UsageError);

  // Pressure norm is the force norm of d p.
  auto rng = testing::rng(3);
  const FormField p = random_mean_zero_form(g, 0, 4, rng);
  const FormField dp = exterior_derivative(p);
  auto ps = stationary_series(dp, 1.0, 1);
  TimeSeriesSolution with_p({0.0, 1.0}, {dp, dp});
  with_p.set_pressure({p, p});
  with_p.set_pressure_derivatives({{FormField(g, 0), FormField(g, 0)}});
  CHECK(bochner_norm(with_p, {1, 1, BochnerRole::pressure}) ==
        doctest::Approx(bochner_norm(ps, {1, 1, BochnerRole::force})).epsilon(1e-14));
}

TEST_CASE("Gagliardo-Nirenberg index handling") {
  // Sobolev case on T^3: j0 = 0, m0 = 1, r0 = 2, p0 = 2n/(n-2) = 6 gives a = 1.
  CHECK(interpolation_exponent(3, {0, 1, 6.0, 2.0, 2.0}) == doctest::Approx(1.0));
  // T^2, p0 = 4: a = 1/2.
  CHECK(interpolation_exponent(2, {0, 1, 4.0, 2.0, 2.0}) == doctest::Approx(0.5));
  // T^2, p0 = inf would need a = 1 in the exceptional case m0 - j0 - n/r0 = 0.
  CHECK_THROWS_AS((void)interpolation_exponent(2, {0, 1, kInfinity, 2.0, 2.0}), ParameterError);
  // a outside [j0/m0, 1].
  CHECK_THROWS_AS((void)interpolation_exponent(3, {1, 2, 1.2, 2.0, 2.0}), ParameterError);

  auto g = SpectralGrid::make(3, 16);
  FormField c(g, 0);
  c.set_mode(0, 0, 2.0);
  const auto r = gagliardo_nirenberg_check(c, {1, 2, 3.0, 2.0, 2.0});
  CHECK(r.lhs == 0.0);
  CHECK(r.admissible);

  auto rng = testing::rng(5);
  const FormField v = random_form(g, 1, 4, rng);
  const auto s = gagliardo_nirenberg_check(v, {0, 1, 6.0, 2.0, 2.0});
  CHECK(s.lhs == doctest::Approx(lp_norm(v, 6.0)));
  // a = 1: rhs factor is (||grad v||_2 + ||v||_2) + ||v||_2.
  CHECK(s.rhs_factor == doctest::Approx(l2_norm(fractional_power(v, 1.0)) + 2 * l2_norm(v)).epsilon(1e-12));
  CHECK(std::isfinite(s.ratio));
}

TEST_CASE("Gagliardo-Nirenberg survey is stable under resolution doubling") {
  const GagliardoNirenbergIndices idx{0, 1, 6.0, 2.0, 2.0};
  const auto a = gagliardo_nirenberg_survey(SpectralGrid::make(3, 16), 0, idx, 40, 4, 17);
  const auto b = gagliardo_nirenberg_survey(SpectralGrid::make(3, 32), 0, idx, 40, 4, 17);
  CHECK(std::isfinite(a.max_ratio));
  CHECK(std::abs(a.max_ratio - b.max_ratio) <= 0.1 * b.max_ratio);
}

TEST_CASE("Gronwall envelope") {
  std::vector<double> t, A, B, Y, zero;
  for (int n = 0; n <= 100; ++n) {
    const double tn = n / 100.0;
    t.push_back(tn);
    A.push_back(1.0);
    B.push_back(1.0);
    Y.push_back(std::exp(tn));
    zero.push_back(0.0);
  }
  const auto sat = gronwall_envelope(t, A, B, Y);
  CHECK(sat.envelope_holds());
  CHECK(sat.bound.back() == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  for (bool b : sat.integral_inequality) CHECK(b);

  // B = 0: the envelope is Y <= A.
  auto over = Y;
  const auto r0 = gronwall_envelope(t, A, zero, over);
  CHECK(r0.hypotheses_hold);
  CHECK_FALSE(r0.envelope_holds());
  const auto r1 = gronwall_envelope(t, Y, zero, A);
  CHECK(r1.envelope_holds());

  auto decreasing = A;
  decreasing[50] = 0.5;
  const auto bad = gronwall_envelope(t, decreasing, B, Y);
  CHECK_FALSE(bad.hypotheses_hold);
  CHECK(bad.envelope.empty());
  auto negative = B;
  negative[3] = -1.0;
  CHECK_FALSE(gronwall_envelope(t, A, negative, Y).hypotheses_hold);
}
