#include "hodge/multi_index.hpp"

#include <bit>
#include <stdexcept>

namespace hodge {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return static_cast<int>(r);
}

MultiIndexTable::MultiIndexTable(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || dim > 3 || degree < 0 || degree > dim) {
    throw std::invalid_argument("MultiIndexTable: degree must lie in [0, dim], dim in [1, 3]");
  }
  // Lexicographic order of increasing tuples: recursive enumeration.
  std::vector<int> current;
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == degree) {
      std::uint32_t m = 0;
      for (int a : current) m |= 1u << a;
      masks_.push_back(m);
      return;
    }
    for (int a = start; a < dim; ++a) {
      current.push_back(a);
      self(self, a + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
}

std::vector<int> MultiIndexTable::axes(int component) const {
  std::vector<int> out;
  const std::uint32_t m = masks_.at(component);
  for (int a = 0; a < dim_; ++a)
    if (m & (1u << a)) out.push_back(a);
  return out;
}

int MultiIndexTable::position(std::uint32_t mask) const {
  for (int c = 0; c < size(); ++c)
    if (masks_[c] == mask) return c;
  return -1;
}

std::vector<IncidenceEntry> exterior_incidence(int dim, int degree) {
  const MultiIndexTable src(dim, degree);
  const MultiIndexTable dst(dim, degree + 1);
  std::vector<IncidenceEntry> out;
  for (int t = 0; t < dst.size(); ++t) {
    const auto axes = dst.axes(t);
    for (int r = 0; r < static_cast<int>(axes.size()); ++r) {
      // dx^a ^ dx^I = (-1)^r dx^J where r counts entries of I below a.
      const std::uint32_t source_mask = dst.mask(t) & ~(1u << axes[r]);
      out.push_back({t, src.position(source_mask), axes[r], (r % 2 == 0) ? 1 : -1});
    }
  }
  return out;
}

}  // namespace hodge
