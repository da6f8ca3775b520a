#include "hodge/report.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

#include "hodge/errors.hpp"

namespace hodge {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::measured: return "measured";
  }
  return "measured";
}

const std::vector<std::string>& known_anchors() {
  static const std::vector<std::string> anchors = {
      "hodge-parametrix",       // phi Delta = Delta phi = I - Pi
      "helmholtz-projector",    // P idempotent, self-adjoint, onto ker d^*
      "hodge-decomposition",    // u = exact + coexact + harmonic
      "complex-property",       // d d = 0 and (du, v) = (u, d^* v)
      "norm-equivalence",       // tilde norm vs nabla norm
      "bochner-norms",          // space-time norms
      "gagliardo-nirenberg",    // interpolation inequality
      "gronwall",               // integral inequality envelope
      "continuity-of-B",        // B bounded between Bochner spaces
      "trilinear-form",         // (B(w, u), u) = 0 for coclosed w
      "galerkin-basis",         // orthonormal basis of ker d^*
      "navier-stokes-equation", // nonlinear problem with pressure
      "pressure-formula",       // d p = (I - P)(f - N(u))
      "divergence-free",        // d^* u = 0 for all t
      "energy-law",             // energy identity and decay
      "lions-identity",         // d/dt |u|^2 = 2 (d_t u, u)
      "linearized-inverse",     // the linearized operator is invertible
      "uniqueness",             // at most one solution
      "frechet-derivative",     // derivative of the nonlinear map
      "open-mapping",           // local solvability near a solution
      "galerkin-uniform-bounds",// bounds independent of m
      "plumbing",
  };
  return anchors;
}

bool is_known_anchor(const std::string& anchor) {
  const auto& a = known_anchors();
  return std::find(a.begin(), a.end(), anchor) != a.end();
}

void VerificationReport::add(CheckRecord rec) {
  if (!is_known_anchor(rec.anchor)) throw UsageError("report: unknown anchor '" + rec.anchor + "'");
  for (const auto& c : checks_) {
    if (c.id == rec.id) throw UsageError("report: duplicate check id '" + rec.id + "'");
  }
  checks_.push_back(std::move(rec));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c);
}

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(checks_.begin(), checks_.end(),
                                        [](const CheckRecord& c) { return c.status == CheckStatus::fail; }));
}

nlohmann::json VerificationReport::to_json(bool with_runtime) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}};
    // JSON has no infinities or NaN; those become null.
    j["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
    j["tol"] = std::isfinite(c.tol) ? nlohmann::json(c.tol) : nlohmann::json(nullptr);
    if (with_runtime) j["runtime"] = c.runtime;
    checks.push_back(std::move(j));
  }
  return {{"experiment", experiment_}, {"seed", seed_}, {"checks", std::move(checks)}};
}

void VerificationReport::write_json(const std::filesystem::path& path, bool with_runtime) const {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << to_json(with_runtime).dump(2) << '\n';
}

bool same_results(const VerificationReport& a, const VerificationReport& b) {
  if (a.checks().size() != b.checks().size()) return false;
  for (std::size_t i = 0; i < a.checks().size(); ++i) {
    const auto& x = a.checks()[i];
    const auto& y = b.checks()[i];
    if (x.id != y.id || x.anchor != y.anchor || x.status != y.status) return false;
    if (std::bit_cast<std::uint64_t>(x.value) != std::bit_cast<std::uint64_t>(y.value)) return false;
    if (std::bit_cast<std::uint64_t>(x.tol) != std::bit_cast<std::uint64_t>(y.tol)) return false;
  }
  return true;
}

}  // namespace hodge
