#pragma once

#include <cstdint>
#include <vector>

namespace hodge {

[[nodiscard]] int binomial(int n, int k);

// Increasing multi-indices I = (i_1 < ... < i_k) over {0, ..., n-1}, stored as
// bit masks and enumerated in lexicographic order. Component c of a degree-k
// form on T^n is the coefficient of dx^{I_c}.
class MultiIndexTable {
 public:
  MultiIndexTable(int dim, int degree);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int size() const { return static_cast<int>(masks_.size()); }
  [[nodiscard]] std::uint32_t mask(int component) const { return masks_[component]; }
  [[nodiscard]] std::vector<int> axes(int component) const;
  // Component position for a mask, or -1 when the mask has the wrong weight.
  [[nodiscard]] int position(std::uint32_t mask) const;

 private:
  int dim_;
  int degree_;
  std::vector<std::uint32_t> masks_;
};

// One term of the exterior derivative d: degree k -> k+1,
//   (du)_{target} += sign * d_axis u_{source}.
struct IncidenceEntry {
  int target;
  int source;
  int axis;
  int sign;
};

// All (target, source, axis, sign) terms of d on degree-k forms, ordered by
// target then by position of the inserted axis.
[[nodiscard]] std::vector<IncidenceEntry> exterior_incidence(int dim, int degree);

}  // namespace hodge
