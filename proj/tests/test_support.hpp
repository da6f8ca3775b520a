#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "hodge/form_field.hpp"
#include "hodge/transform.hpp"

namespace hodge::testing {

inline double rel_diff(const FormField& a, const FormField& b, double scale) {
  FormField d = a;
  d -= b;
  return l2_norm(d) / (scale > 0.0 ? scale : 1.0);
}

inline double rel_diff(const FormField& a, const FormField& b) {
  return rel_diff(a, b, std::max(l2_norm(a), l2_norm(b)));
}

using ScalarFn = std::function<double(const std::array<double, 3>&)>;

// Samples per-component analytic functions on the grid and transforms them.
inline FormField sample_form(const GridPtr& grid, int degree, const std::vector<ScalarFn>& comps) {
  PhysicalField f{grid, degree, std::vector<double>(comps.size() * grid->size())};
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t x = 0; x < grid->size(); ++x) f.values[c * grid->size() + x] = comps[c](sample_point(*grid, x));
  return from_physical(f);
}

// Partial derivative of an analytic function by Richardson-extrapolated
// central differences (independent of any spectral machinery).
inline double fd_partial(const ScalarFn& f, std::array<double, 3> x, int axis) {
  auto central = [&](double h) {
    auto xp = x, xm = x;
    xp[axis] += h;
    xm[axis] -= h;
    return (f(xp) - f(xm)) / (2.0 * h);
  };
  // Three levels of Richardson on h, h/2, h/4 (error O(h^6)).
  const double h = 1e-2;
  const double d1 = central(h), d2 = central(h / 2), d3 = central(h / 4);
  const double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
  return (16 * r2 - r1) / 15;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace hodge::testing
