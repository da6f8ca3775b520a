#include "hodge/experiments.hpp"

#include <algorithm>
#include <map>

#include "checks.hpp"
#include "hodge/errors.hpp"
#include "hodge/nonlinearity.hpp"

namespace hodge {

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> g = {"hodge",        "norms",  "gn-survey",  "continuity",
                                             "galerkin-basis", "taylor-green", "energy", "linearized",
                                             "newton",       "galerkin", "io"};
  return g;
}

namespace {

const std::map<std::string, std::vector<std::string>>& preset_groups() {
  static const std::map<std::string, std::vector<std::string>> p = {
      {"taylor-green", {"taylor-green"}},
      {"hodge-identities", {"hodge"}},
      {"norms", {"norms", "gn-survey"}},
      {"linearized", {"linearized"}},
      {"newton", {"newton"}},
      {"energy", {"energy"}},
      {"galerkin", {"galerkin-basis", "galerkin"}},
      {"continuity", {"continuity"}},
      {"all", check_groups()},
  };
  return p;
}

detail::Context context_for(const RunConfig& cfg) {
  detail::Context ctx;
  ctx.seed = cfg.seed;
  ctx.dim = cfg.solver.dim;
  ctx.res = cfg.solver.res;
  ctx.solver = cfg.solver;
  return ctx;
}

}  // namespace

const std::vector<std::string>& experiment_presets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : preset_groups()) v.push_back(k);
    return v;
  }();
  return names;
}

void ExperimentSpec::validate() const {
  config.solver.validate();
  for (const auto& c : checks)
    if (!detail::is_check_group(c)) throw UsageError("unknown check group '" + c + "'");
  // Surfaces unknown nonlinearity presets before any work is done.
  (void)preset_by_name(config.preset, config.solver.dim, config.solver.degree);
  if (output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*output_dir, ec);
    if (ec || !std::filesystem::is_directory(*output_dir))
      throw UsageError("cannot create output directory " + output_dir->string());
  }
}

ExperimentSpec make_experiment(const std::string& preset, const RunConfig& cfg) {
  const auto it = preset_groups().find(preset);
  if (it == preset_groups().end()) throw UsageError("unknown experiment preset '" + preset + "'");
  return {preset, cfg, it->second, std::nullopt};
}

VerificationReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  VerificationReport report(spec.name, spec.config.seed);
  const detail::Context ctx = context_for(spec.config);
  for (const auto& g : spec.checks) detail::run_group(g, ctx, report);
  if (spec.output_dir) report.write_json(*spec.output_dir / "report.json");
  return report;
}

VerificationReport verify_all(std::uint64_t seed, VerifySizes sizes) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.solver.dim = sizes.dim;
  cfg.solver.res = sizes.res;
  ExperimentSpec spec{"verify", cfg, check_groups(), std::nullopt};
  return run_experiment(spec);
}

}  // namespace hodge
