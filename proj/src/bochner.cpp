#include "hodge/bochner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/sobolev.hpp"

namespace hodge {

TimeSeriesSolution::TimeSeriesSolution(std::vector<double> times, std::vector<FormField> velocity)
    : times_(std::move(times)), u_(std::move(velocity)) {
  if (times_.empty() || times_.size() != u_.size()) throw UsageError("TimeSeriesSolution: times/snapshots mismatch");
  if (times_.front() != 0.0) throw UsageError("TimeSeriesSolution: first sample must be t = 0");
  for (std::size_t n = 1; n < times_.size(); ++n)
    if (!(times_[n] > times_[n - 1])) throw UsageError("TimeSeriesSolution: times must increase");
  for (const auto& u : u_) u.require_same_space(u_.front(), "TimeSeriesSolution");
}

void TimeSeriesSolution::check_series(const std::vector<FormField>& series, const char* what) const {
  if (series.size() != times_.size()) throw UsageError(std::string(what) + ": wrong number of samples");
  for (const auto& f : series) f.require_same_space(series.front(), what);
  if (!(series.front().grid() == u_.front().grid())) throw UsageError(std::string(what) + ": grid differs from velocity");
}

void TimeSeriesSolution::set_pressure(std::vector<FormField> p) {
  check_series(p, "set_pressure");
  p_ = std::move(p);
}

void TimeSeriesSolution::set_derivatives(std::vector<std::vector<FormField>> du) {
  for (const auto& s : du) {
    check_series(s, "set_derivatives");
    s.front().require_same_space(u_.front(), "set_derivatives");
  }
  du_ = std::move(du);
}

void TimeSeriesSolution::set_pressure_derivatives(std::vector<std::vector<FormField>> dp) {
  if (p_.empty()) throw UsageError("set_pressure_derivatives: no pressure series");
  for (const auto& s : dp) {
    check_series(s, "set_pressure_derivatives");
    s.front().require_same_space(p_.front(), "set_pressure_derivatives");
  }
  dp_ = std::move(dp);
}

const FormField& TimeSeriesSolution::derivative(int j, std::size_t n) const {
  if (j == 0) return u_.at(n);
  if (j < 0 || j > derivative_order()) {
    throw UsageError("TimeSeriesSolution: time derivative of order " + std::to_string(j) + " is not cached");
  }
  return du_[j - 1].at(n);
}

const FormField& TimeSeriesSolution::pressure_derivative(int j, std::size_t n) const {
  if (p_.empty()) throw UsageError("TimeSeriesSolution: no pressure series");
  if (j == 0) return p_.at(n);
  if (j < 0 || j > pressure_derivative_order()) {
    throw UsageError("TimeSeriesSolution: pressure derivative of order " + std::to_string(j) + " is not cached");
  }
  return dp_[j - 1].at(n);
}

double bochner_norm_squared(const TimeSeriesSolution& sol, BochnerIndex idx) {
  if (idx.k < 0 || idx.s < 0) throw ParameterError("bochner_norm: need k >= 0 and s >= 0");
  const bool pressure = idx.role == BochnerRole::pressure;
  const int needed = idx.s;
  if (pressure) {
    if (!sol.has_pressure()) throw UsageError("bochner_norm: pressure role needs a pressure series");
    if (sol.pressure_derivative_order() < needed) throw UsageError("bochner_norm: pressure derivative cache missing");
  } else if (sol.derivative_order() < needed) {
    throw UsageError("bochner_norm: time-derivative cache missing");
  }

  const auto& t = sol.times();
  double total = 0.0;
  std::vector<double> integrand(t.size());
  for (int j = 0; j <= idx.s; ++j) {
    // Series g_n = d_t^j u(t_n), or d applied to d_t^j p(t_n).
    std::vector<FormField> g;
    g.reserve(t.size());
    for (std::size_t n = 0; n < t.size(); ++n) {
      g.push_back(pressure ? exterior_derivative(sol.pressure_derivative(j, n)) : sol.derivative(j, n));
    }
    for (int m = 0; m + 2 * j <= 2 * idx.s; ++m) {
      for (int l = 0; l <= idx.k; ++l) {
        const int sigma = l + m;
        double sup = 0.0;
        for (std::size_t n = 0; n < t.size(); ++n) {
          sup = std::max(sup, derivative_power_norm2(g[n], sigma));
          integrand[n] = derivative_power_norm2(g[n], sigma + 1);
        }
        total += sup + trapezoid(t, integrand);
      }
    }
  }
  return total;
}

double bochner_norm(const TimeSeriesSolution& sol, BochnerIndex idx) {
  return std::sqrt(bochner_norm_squared(sol, idx));
}

TimeSeriesSolution stationary_series(const FormField& u, double T, int s) {
  if (!(T > 0.0)) throw UsageError("stationary_series: T must be positive");
  TimeSeriesSolution sol({0.0, T}, {u, u});
  std::vector<std::vector<FormField>> du;
  for (int j = 1; j <= s; ++j) {
    du.push_back({FormField(u.grid_ptr(), u.degree()), FormField(u.grid_ptr(), u.degree())});
  }
  sol.set_derivatives(std::move(du));
  return sol;
}

EmbeddingNorms embedding_norms(const TimeSeriesSolution& sol) {
  EmbeddingNorms e;
  const int n = sol.grid_ptr()->dim();
  std::vector<double> sq(sol.samples());
  for (std::size_t i = 0; i < sol.samples(); ++i) {
    const double linf = lp_norm(sol.velocity(i), kInfinity);
    sq[i] = linf * linf;
    e.linf_time_ln = std::max(e.linf_time_ln, lp_norm(sol.velocity(i), n));
  }
  e.l2_time_linf = std::sqrt(trapezoid(sol.times(), sq));
  return e;
}

}  // namespace hodge
