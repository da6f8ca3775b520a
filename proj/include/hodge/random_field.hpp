#pragma once

#include <cstdint>
#include <random>

#include "hodge/form_field.hpp"

namespace hodge {

// Band-limited Gaussian field: independent standard complex normals on every
// mode with max_j |k_j| <= band (band is clipped to the dealiasing cutoff),
// made Hermitian. Draws are taken over the band lattice in a fixed order, so
// the same generator state produces the same coefficients on any grid that
// holds the band.
[[nodiscard]] FormField random_form(const GridPtr& grid, int degree, int band, std::mt19937_64& rng);

// Same, with a zero mean (no harmonic component).
[[nodiscard]] FormField random_mean_zero_form(const GridPtr& grid, int degree, int band,
                                              std::mt19937_64& rng);

// Band-limited field with Gaussian coefficients scaled by (1 + |k|^2)^{-decay/2}.
[[nodiscard]] FormField random_smooth_form(const GridPtr& grid, int degree, int band, double decay,
                                           std::mt19937_64& rng);

}  // namespace hodge
