#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace hodge {

enum class CheckStatus { pass, fail, measured };

[[nodiscard]] std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::measured;
  double value = 0.0;
  double tol = 0.0;
  double runtime = 0.0;  // seconds
};

// Anchors a check may cite: the mathematical statement it exercises, or
// "plumbing" for infrastructure.
[[nodiscard]] const std::vector<std::string>& known_anchors();
[[nodiscard]] bool is_known_anchor(const std::string& anchor);

class VerificationReport {
 public:
  VerificationReport(std::string experiment, std::uint64_t seed) : experiment_(std::move(experiment)), seed_(seed) {}

  [[nodiscard]] const std::string& experiment() const { return experiment_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] const std::vector<CheckRecord>& checks() const { return checks_; }
  [[nodiscard]] bool empty() const { return checks_.empty(); }

  // UsageError for an unknown anchor or a duplicate id.
  void add(CheckRecord rec);
  void merge(const VerificationReport& other);
  // Failed-check count; measured records never fail.
  [[nodiscard]] int failures() const;
  [[nodiscard]] bool passed() const { return failures() == 0; }

  // {experiment, seed, checks: [{id, anchor, status, value, tol[, runtime]}]}
  [[nodiscard]] nlohmann::json to_json(bool with_runtime = true) const;
  void write_json(const std::filesystem::path& path, bool with_runtime = true) const;

 private:
  std::string experiment_;
  std::uint64_t seed_;
  std::vector<CheckRecord> checks_;
};

// Same ids, anchors, statuses, and bitwise-equal values and tolerances.
[[nodiscard]] bool same_results(const VerificationReport& a, const VerificationReport& b);

}  // namespace hodge
