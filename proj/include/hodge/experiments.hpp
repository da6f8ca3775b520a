#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hodge/config.hpp"
#include "hodge/report.hpp"

namespace hodge {

// A named experiment: configuration, the check groups to run and where to
// write artifacts. Dimension and resolution come from config.solver.
struct ExperimentSpec {
  std::string name;
  RunConfig config;
  std::vector<std::string> checks;
  std::optional<std::filesystem::path> output_dir;

  // UsageError for unknown check groups, presets or an unwritable directory.
  void validate() const;
};

// Check groups: hodge, norms, gn-survey, continuity, galerkin-basis,
// taylor-green, energy, linearized, newton, galerkin, io.
[[nodiscard]] const std::vector<std::string>& check_groups();
// Presets: taylor-green, hodge-identities, norms, linearized, newton, energy,
// galerkin, continuity, all.
[[nodiscard]] const std::vector<std::string>& experiment_presets();
[[nodiscard]] ExperimentSpec make_experiment(const std::string& preset, const RunConfig& cfg);

// Runs the listed groups in order. Solver blow-up inside a group becomes a
// failed record instead of an exception. With an output directory the report
// is also written there as report.json.
[[nodiscard]] VerificationReport run_experiment(const ExperimentSpec& spec);

struct VerifySizes {
  int dim = 2;
  int res = 32;
};

// Every check group at the given sizes with default solver settings.
[[nodiscard]] VerificationReport verify_all(std::uint64_t seed, VerifySizes sizes = {});

}  // namespace hodge
