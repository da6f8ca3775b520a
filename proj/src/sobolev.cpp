#include "hodge/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/kernels.hpp"
#include "hodge/random_field.hpp"
#include "hodge/transform.hpp"

namespace hodge {

namespace {

void require_exponent(double p) {
  if (!(p > 1.0)) throw DomainError("Sobolev norms need an integrability exponent p > 1");
}

// (a^p + b^p)^{1/p}, including the limit p = inf.
double combine(double a, double b, double p) {
  if (std::isinf(p)) return std::max(a, b);
  return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
}

double combine3(double a, double b, double c, double p) {
  if (std::isinf(p)) return std::max({a, b, c});
  return std::pow(std::pow(a, p) + std::pow(b, p) + std::pow(c, p), 1.0 / p);
}

}  // namespace

double lp_norm(const FormField& u, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
  const PhysicalField f = to_physical(u);
  const std::size_t points = u.grid().size();
  if (std::isinf(p)) return kernels::parallel::fibre_max(f.values, u.components(), points);
  const double sum = kernels::parallel::fibre_power_sum(f.values, u.components(), points, p);
  return std::pow(sum / static_cast<double>(points), 1.0 / p);
}

FormField derivative_power(const FormField& u, double sigma) {
  if (sigma == 0.0) return u;
  return fractional_power(u, sigma);
}

double derivative_power_norm2(const FormField& u, double sigma) {
  if (sigma < 0.0) throw DomainError("derivative_power_norm2: negative order");
  const auto& g = u.grid();
  std::vector<double> w(g.size());
  const auto ksq = g.k_squared();
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (sigma == 0.0) {
      w[q] = 1.0;
    } else {
      w[q] = ksq[q] == 0.0 ? 0.0 : std::pow(ksq[q], sigma);
    }
  }
  double s = 0.0;
  for (int c = 0; c < u.components(); ++c) s += kernels::parallel::weighted_norm2(u.component(c), w);
  return s;
}

double nabla_norm(const FormField& u, SobolevIndex idx) {
  require_exponent(idx.p);
  if (idx.s < 0.0) throw DomainError("nabla_norm: negative order");
  return combine(lp_norm(fractional_power(u, idx.s), idx.p), lp_norm(harmonic_projection(u), idx.p), idx.p);
}

double nabla_norm_spectral(const FormField& u, double s) {
  return std::sqrt(derivative_power_norm2(fractional_power(u, s), 0.0) +
                   derivative_power_norm2(harmonic_projection(u), 0.0));
}

double tilde_norm(const FormField& u, int m, double p) {
  require_exponent(p);
  const TildeNabla t = tilde_nabla(u, m);
  const double harm = lp_norm(harmonic_projection(u), p);
  if (t.even) return combine(lp_norm(*t.even, p), harm, p);
  const double a = t.exact ? lp_norm(*t.exact, p) : 0.0;
  const double b = t.coexact ? lp_norm(*t.coexact, p) : 0.0;
  return combine3(a, b, harm, p);
}

double interpolation_exponent(int n, const GagliardoNirenbergIndices& idx) {
  constexpr double eps = 1e-12;
  if (idx.j0 < 0 || idx.m0 < 1 || idx.j0 > idx.m0) throw ParameterError("GN: need 0 <= j0 <= m0, m0 >= 1");
  if (!(idx.p0 >= 1.0) || !(idx.q0 >= 1.0) || !(idx.r0 >= 1.0)) throw ParameterError("GN: exponents must be >= 1");
  auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
  const double coeff = inv(idx.r0) - static_cast<double>(idx.m0) / n - inv(idx.q0);
  const double rhs = inv(idx.p0) - static_cast<double>(idx.j0) / n - inv(idx.q0);
  const double lower = static_cast<double>(idx.j0) / idx.m0;
  double a;
  if (std::abs(coeff) < eps) {
    if (std::abs(rhs) > eps) throw ParameterError("GN: index relation has no solution");
    a = lower;
  } else {
    a = rhs / coeff;
  }
  const double rel = idx.m0 - idx.j0 - (std::isinf(idx.r0) ? 0.0 : n / idx.r0);
  const bool exceptional = idx.r0 > 1.0 && !std::isinf(idx.r0) && rel > -eps &&
                           std::abs(rel - std::round(rel)) < eps;
  const double upper_slack = exceptional ? -eps : eps;
  if (a < lower - eps || a > 1.0 + upper_slack) {
    std::ostringstream msg;
    msg << "GN: exponent a = " << a << " outside the admissible range [" << lower << ", 1"
        << (exceptional ? ")" : "]");
    throw ParameterError(msg.str());
  }
  return std::clamp(a, lower, 1.0);
}

GagliardoNirenbergReport gagliardo_nirenberg_check(const FormField& v, const GagliardoNirenbergIndices& idx) {
  GagliardoNirenbergReport r;
  r.a = interpolation_exponent(v.grid().dim(), idx);
  r.admissible = true;
  r.lhs = lp_norm(derivative_power(v, idx.j0), idx.p0);
  const double l2 = l2_norm(v);
  const double top = lp_norm(derivative_power(v, idx.m0), idx.r0) + l2;
  const double low = r.a < 1.0 ? lp_norm(v, idx.q0) : 1.0;
  r.rhs_factor = std::pow(top, r.a) * std::pow(low, 1.0 - r.a) + l2;
  r.ratio = r.rhs_factor > 0.0 ? r.lhs / r.rhs_factor : 0.0;
  return r;
}

GagliardoNirenbergSurvey gagliardo_nirenberg_survey(const GridPtr& grid, int degree,
                                                    const GagliardoNirenbergIndices& idx, int count, int band,
                                                    std::uint64_t seed) {
  GagliardoNirenbergSurvey s;
  s.a = interpolation_exponent(grid->dim(), idx);
  std::mt19937_64 rng(seed);
  double total = 0.0;
  s.min_ratio = kInfinity;
  for (int t = 0; t < count; ++t) {
    const auto r = gagliardo_nirenberg_check(random_form(grid, degree, band, rng), idx);
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    s.min_ratio = std::min(s.min_ratio, r.ratio);
    total += r.ratio;
  }
  s.samples = count;
  s.mean_ratio = count > 0 ? total / count : 0.0;
  if (count == 0) s.min_ratio = 0.0;
  return s;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& v) {
  if (t.size() != v.size()) throw UsageError("trapezoid: size mismatch");
  double s = 0.0;
  for (std::size_t n = 1; n < t.size(); ++n) s += 0.5 * (t[n] - t[n - 1]) * (v[n] + v[n - 1]);
  return s;
}

bool GronwallReport::envelope_holds() const {
  return hypotheses_hold && std::all_of(envelope.begin(), envelope.end(), [](bool b) { return b; });
}

GronwallReport gronwall_envelope(const std::vector<double>& t, const std::vector<double>& A,
                                 const std::vector<double>& B, const std::vector<double>& Y, double rel_tol) {
  if (t.size() != A.size() || t.size() != B.size() || t.size() != Y.size()) {
    throw UsageError("gronwall_envelope: series lengths differ");
  }
  GronwallReport r;
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (B[n] < 0.0) {
      r.violation = "B is negative at sample " + std::to_string(n);
      return r;
    }
    if (n > 0 && A[n] < A[n - 1]) {
      r.violation = "A decreases at sample " + std::to_string(n);
      return r;
    }
  }
  r.hypotheses_hold = true;
  double intB = 0.0, intBY = 0.0;
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (n > 0) {
      const double h = t[n] - t[n - 1];
      intB += 0.5 * h * (B[n] + B[n - 1]);
      intBY += 0.5 * h * (B[n] * Y[n] + B[n - 1] * Y[n - 1]);
    }
    const double hyp = A[n] + intBY;
    r.integral_inequality.push_back(Y[n] <= hyp + rel_tol * std::abs(hyp));
    const double bound = A[n] * std::exp(intB);
    r.bound.push_back(bound);
    r.envelope.push_back(Y[n] <= bound + rel_tol * std::abs(bound));
  }
  return r;
}

}  // namespace hodge
