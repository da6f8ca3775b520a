#include "hodge/random_field.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hodge {

namespace {

bool upper_half(std::span<const int> k) {
  for (int v : k) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

FormField draw(const GridPtr& grid, int degree, int band, double decay, bool with_mean,
               std::mt19937_64& rng) {
  FormField u(grid, degree);
  const int n = grid->dim();
  band = std::clamp(band, 0, grid->dealias_cutoff());
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<int> k(n, -band);
  const int width = 2 * band + 1;
  long long total = 1;
  for (int a = 0; a < n; ++a) total *= width;
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    for (int a = n - 1; a >= 0; --a) {
      k[a] = static_cast<int>(rem % width) - band;
      rem /= width;
    }
    const bool zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
    if (!zero && !upper_half(k)) continue;
    double ksq = 0.0;
    for (int v : k) ksq += static_cast<double>(v) * v;
    const double amp = decay == 0.0 ? 1.0 : std::pow(1.0 + ksq, -0.5 * decay);
    const std::size_t q = grid->index_of(k);
    for (int c = 0; c < u.components(); ++c) {
      const double re = normal(rng);
      const double im = zero ? 0.0 : normal(rng);
      if (zero && !with_mean) continue;
      u.set_mode(c, q, amp * cplx(re, im));
    }
  }
  return u;
}

}  // namespace

FormField random_form(const GridPtr& grid, int degree, int band, std::mt19937_64& rng) {
  return draw(grid, degree, band, 0.0, true, rng);
}

FormField random_mean_zero_form(const GridPtr& grid, int degree, int band, std::mt19937_64& rng) {
  return draw(grid, degree, band, 0.0, false, rng);
}

FormField random_smooth_form(const GridPtr& grid, int degree, int band, double decay, std::mt19937_64& rng) {
  return draw(grid, degree, band, decay, true, rng);
}

}  // namespace hodge
