#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "hodge/galerkin.hpp"

namespace hodge {

// Run configuration read from `key = value` lines ('#' starts a comment).
// Keys: mu, T, dt, res, dim, degree, m, scheme, preset, seed,
// newton.max_iter, newton.tol.
struct RunConfig {
  SolverConfig solver;
  std::string preset = "navier-stokes-i1";
  std::uint64_t seed = 1;
};

// UsageError on unknown keys or malformed values (with the line number);
// ParameterError when the result fails validation.
[[nodiscard]] RunConfig parse_config(std::istream& is);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);
void write_config(std::ostream& os, const RunConfig& cfg);

}  // namespace hodge
