#pragma once

#include <optional>
#include <vector>

#include "hodge/form_field.hpp"

namespace hodge {

enum class BochnerRole { velocity, force, pressure };

// Space-time index (k, 2s, s). Solver-facing checks additionally require
// 2s + k > n/2.
struct BochnerIndex {
  int k = 0;
  int s = 1;
  BochnerRole role = BochnerRole::velocity;
};

// Time-sampled solution on [0, T] with cached time derivatives.
// derivatives[j-1][n] holds d_t^j u(t_n); pressure_derivatives likewise.
class TimeSeriesSolution {
 public:
  TimeSeriesSolution(std::vector<double> times, std::vector<FormField> velocity);

  [[nodiscard]] const std::vector<double>& times() const { return times_; }
  [[nodiscard]] double horizon() const { return times_.back(); }
  [[nodiscard]] std::size_t samples() const { return times_.size(); }
  [[nodiscard]] const std::vector<FormField>& velocity() const { return u_; }
  [[nodiscard]] const FormField& velocity(std::size_t n) const { return u_[n]; }
  [[nodiscard]] const GridPtr& grid_ptr() const { return u_.front().grid_ptr(); }
  [[nodiscard]] int degree() const { return u_.front().degree(); }

  [[nodiscard]] bool has_pressure() const { return !p_.empty(); }
  [[nodiscard]] const std::vector<FormField>& pressure() const { return p_; }
  void set_pressure(std::vector<FormField> p);

  // Number of cached velocity derivatives (0 when none).
  [[nodiscard]] int derivative_order() const { return static_cast<int>(du_.size()); }
  [[nodiscard]] int pressure_derivative_order() const { return static_cast<int>(dp_.size()); }
  // j = 0 returns the snapshot itself. UsageError when j is not cached.
  [[nodiscard]] const FormField& derivative(int j, std::size_t n) const;
  [[nodiscard]] const FormField& pressure_derivative(int j, std::size_t n) const;
  void set_derivatives(std::vector<std::vector<FormField>> du);
  void set_pressure_derivatives(std::vector<std::vector<FormField>> dp);

 private:
  void check_series(const std::vector<FormField>& series, const char* what) const;

  std::vector<double> times_;
  std::vector<FormField> u_;
  std::vector<FormField> p_;
  std::vector<std::vector<FormField>> du_;
  std::vector<std::vector<FormField>> dp_;
};

// Squared norm
//   sum_{m + 2j <= 2s, 0 <= l <= k} max_t ||D^{l+m} d_t^j g||^2 + int_0^T ||D^{l+m+1} d_t^j g||^2 dt
// with D^0 = I and D^sigma = Delta^{sigma/2} for sigma > 0. The supremum is
// the max over stored samples and the time integral is the trapezoid rule.
// g = u for the velocity and force roles and g = d p for the pressure role.
// The velocity and force norms coincide; the roles differ only in which
// series they are applied to.
[[nodiscard]] double bochner_norm_squared(const TimeSeriesSolution& sol, BochnerIndex idx);
[[nodiscard]] double bochner_norm(const TimeSeriesSolution& sol, BochnerIndex idx);

// Stationary series u(t) = u on two samples {0, T} with zero derivatives up to
// order s. Used for norm surveys of time-independent fields.
[[nodiscard]] TimeSeriesSolution stationary_series(const FormField& u, double T, int s);

// Quantities of the embedding into L^2(I, L^inf) and L^inf(I, L^n).
struct EmbeddingNorms {
  double l2_time_linf = 0.0;
  double linf_time_ln = 0.0;
};
[[nodiscard]] EmbeddingNorms embedding_norms(const TimeSeriesSolution& sol);

}  // namespace hodge
