#include <algorithm>
#include <cmath>

#include "hodge/errors.hpp"
#include "hodge/galerkin.hpp"

namespace hodge {

TimeDependentField::TimeDependentField(GridPtr grid, int degree, Generator gen, bool identically_zero)
    : grid_(std::move(grid)), degree_(degree), gen_(std::move(gen)), zero_(identically_zero) {}

FormField TimeDependentField::derivative(double t, int order) const {
  if (order < 0) throw UsageError("TimeDependentField: negative derivative order");
  if (zero_) return FormField(grid_, degree_);
  FormField out = gen_(t, order);
  out.set_time(t);
  return out;
}

TimeDependentField TimeDependentField::zero(GridPtr grid, int degree) {
  return TimeDependentField(grid, degree, nullptr, true);
}

TimeDependentField TimeDependentField::constant(FormField u) {
  GridPtr g = u.grid_ptr();
  const int deg = u.degree();
  return TimeDependentField(g, deg, [u = std::move(u)](double, int order) {
    return order == 0 ? u : FormField(u.grid_ptr(), u.degree());
  });
}

TimeDependentField TimeDependentField::modulated(FormField u, std::function<double(double, int)> a) {
  GridPtr g = u.grid_ptr();
  const int deg = u.degree();
  return TimeDependentField(g, deg, [u = std::move(u), a = std::move(a)](double t, int order) {
    return a(t, order) * u;
  });
}

TimeDependentField TimeDependentField::exponential(FormField u, double rate) {
  return modulated(std::move(u), [rate](double t, int order) { return std::pow(-rate, order) * std::exp(-rate * t); });
}

TimeDependentField TimeDependentField::sampled(std::vector<double> times, std::vector<FormField> fields) {
  if (times.empty() || times.size() != fields.size()) throw UsageError("sampled: times and fields must match");
  if (!std::is_sorted(times.begin(), times.end()) ||
      std::adjacent_find(times.begin(), times.end()) != times.end()) {
    throw UsageError("sampled: times must increase strictly");
  }
  for (const auto& f : fields) fields.front().require_same_space(f, "sampled");
  GridPtr g = fields.front().grid_ptr();
  const int deg = fields.front().degree();
  return TimeDependentField(g, deg, [t = std::move(times), f = std::move(fields)](double s, int order) {
    if (t.size() == 1) return order == 0 ? f[0] : FormField(f[0].grid_ptr(), f[0].degree());
    std::size_t i = std::upper_bound(t.begin(), t.end(), s) - t.begin();
    i = std::clamp<std::size_t>(i, 1, t.size() - 1);
    const double h = t[i] - t[i - 1];
    if (order >= 2) return FormField(f[0].grid_ptr(), f[0].degree());
    if (order == 1) return (1.0 / h) * (f[i] - f[i - 1]);
    const double w = (s - t[i - 1]) / h;
    return (1.0 - w) * f[i - 1] + w * f[i];
  });
}

}  // namespace hodge
