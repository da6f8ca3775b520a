#include "hodge/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "hodge/errors.hpp"
#include "hodge/multi_index.hpp"

namespace hodge {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW planning is not thread-safe; execution with fftw_execute_dft on fresh
// arrays is. Plans are created once per (dim, res) and kept for the process.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

  PlanPair get(const SpectralGrid& g) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(g.dim(), g.res());
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    int shape[3] = {g.res(), g.res(), g.res()};
    std::vector<cplx> a(g.size()), b(g.size());
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft(g.dim(), shape, pa, pb, FFTW_FORWARD, flags);
    p.backward = fftw_plan_dft(g.dim(), shape, pa, pb, FFTW_BACKWARD, flags);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, PlanPair> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

int PhysicalField::components() const { return binomial(grid->dim(), degree); }

std::span<double> PhysicalField::component(int c) {
  return std::span<double>(values).subspan(c * grid->size(), grid->size());
}

std::span<const double> PhysicalField::component(int c) const {
  return std::span<const double>(values).subspan(c * grid->size(), grid->size());
}

std::array<double, 3> sample_point(const SpectralGrid& g, std::size_t index) {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  const double h = g.spacing();
  for (int a = g.dim() - 1; a >= 0; --a) {
    x[a] = h * static_cast<double>(index % g.res());
    index /= g.res();
  }
  return x;
}

void inverse_transform(std::span<const cplx> coeffs, std::span<double> out, const SpectralGrid& g) {
  const auto plans = plan_cache().get(g);
  std::vector<cplx> in(coeffs.begin(), coeffs.end());
  std::vector<cplx> buf(g.size());
  fftw_execute_dft(plans.backward, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(buf.data()));
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = buf[x].real();
}

void forward_transform(std::span<const double> values, std::span<cplx> out, const SpectralGrid& g) {
  const auto plans = plan_cache().get(g);
  std::vector<cplx> in(values.begin(), values.end());
  fftw_execute_dft(plans.forward, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& c : out) c *= scale;
}

PhysicalField to_physical(const FormField& u) {
  const double scale = u.max_abs();
  if (u.hermitian_defect() > 1e-10 * (scale > 0.0 ? scale : 1.0)) {
    throw IntegrityError("to_physical: coefficients are not Hermitian (field would be complex)");
  }
  PhysicalField f{u.grid_ptr(), u.degree(), std::vector<double>(u.data().size())};
  for (int c = 0; c < u.components(); ++c) inverse_transform(u.component(c), f.component(c), u.grid());
  return f;
}

FormField from_physical(const PhysicalField& f) {
  if (!f.grid) throw UsageError("from_physical: null grid");
  FormField u(f.grid, f.degree);
  if (f.values.size() != u.data().size()) throw UsageError("from_physical: sample count mismatch");
  for (int c = 0; c < u.components(); ++c) forward_transform(f.component(c), u.component(c), *f.grid);
  u.symmetrize();
  return u;
}

}  // namespace hodge
