#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "hodge/errors.hpp"
#include "hodge/galerkin.hpp"
#include "hodge/multi_index.hpp"

namespace hodge {

TimeScheme parse_scheme(const std::string& name) {
  if (name == "imex-euler") return TimeScheme::imex_euler;
  if (name == "imex-rk2") return TimeScheme::imex_rk2;
  throw UsageError("unknown time scheme '" + name + "' (expected imex-euler or imex-rk2)");
}

std::string scheme_name(TimeScheme s) { return s == TimeScheme::imex_euler ? "imex-euler" : "imex-rk2"; }

void SolverConfig::validate() const {
  if (!(mu > 0.0)) throw ParameterError("solver: mu must be positive");
  if (!(T > 0.0)) throw ParameterError("solver: T must be positive");
  if (!(dt > 0.0)) throw ParameterError("solver: dt must be positive");
  if (dim != 2 && dim != 3) throw ParameterError("solver: dimension must be 2 or 3");
  if (degree < 0 || degree > dim) throw ParameterError("solver: degree outside [0, n]");
  if (res < 4 || res % 2 != 0) throw ParameterError("solver: res must be even and >= 4");
  if (time_derivatives < 0) throw ParameterError("solver: negative derivative order");
  if (newton.max_iter < 0 || !(newton.tol > 0.0)) throw ParameterError("solver: bad Newton settings");
}

int SolverConfig::steps() const {
  // Tolerate T/dt landing a hair above an integer.
  return std::max(1, static_cast<int>(std::ceil(T / dt - 1e-9)));
}

Eigen::MatrixXd coclosed_fibre(int dim, int degree, const std::array<int, 3>& k) {
  const int ncomp = binomial(dim, degree);
  if (degree == 0) return Eigen::MatrixXd::Identity(1, 1);
  // Real symbol of d^* up to the factor -i: S(source, target) = sign k_axis.
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(binomial(dim, degree - 1), ncomp);
  for (const auto& e : exterior_incidence(dim, degree - 1)) S(e.source, e.target) += e.sign * k[e.axis];
  const Eigen::MatrixXd Q =
      Eigen::MatrixXd::Identity(ncomp, ncomp) - S.completeOrthogonalDecomposition().pseudoInverse() * S;
  // Gram-Schmidt over the projector columns keeps the choice deterministic.
  std::vector<Eigen::VectorXd> cols;
  for (int c = 0; c < ncomp; ++c) {
    Eigen::VectorXd v = Q.col(c);
    for (const auto& b : cols) v -= b.dot(v) * b;
    for (const auto& b : cols) v -= b.dot(v) * b;
    if (const double nv = v.norm(); nv > 1e-8) cols.push_back(v / nv);
  }
  Eigen::MatrixXd out(ncomp, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = cols[j];
  return out;
}

namespace {

bool upper_half(const std::array<int, 3>& k, int dim) {
  for (int a = 0; a < dim; ++a) {
    if (k[a] != 0) return k[a] > 0;
  }
  return false;
}

std::vector<BasisMode> enumerate_modes(const SpectralGrid& g, int degree) {
  std::vector<std::size_t> slots;
  for (std::size_t m = 0; m < g.size(); ++m) {
    if (!g.retained(m) || g.nyquist(m) || m == SpectralGrid::zero_mode()) continue;
    if (upper_half(g.wavevector(m), g.dim())) slots.push_back(m);
  }
  std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) {
    if (g.k_squared(a) != g.k_squared(b)) return g.k_squared(a) < g.k_squared(b);
    return g.wavevector(a) < g.wavevector(b);
  });
  std::vector<BasisMode> modes;
  for (std::size_t s : slots) {
    const auto k = g.wavevector(s);
    const Eigen::MatrixXd fib = coclosed_fibre(g.dim(), degree, k);
    for (int f = 0; f < fib.cols(); ++f) {
      for (bool sine : {false, true}) {
        BasisMode b;
        b.k = k;
        b.slot = s;
        b.fibre = f;
        b.sine = sine;
        b.k2 = g.k_squared(s);
        b.e.assign(fib.col(f).data(), fib.col(f).data() + fib.rows());
        modes.push_back(std::move(b));
      }
    }
  }
  return modes;
}

}  // namespace

GalerkinBasis::GalerkinBasis(GridPtr grid, int degree, std::vector<BasisMode> modes)
    : grid_(std::move(grid)), degree_(degree), modes_(std::move(modes)), lambda_(modes_.size()) {
  for (std::size_t j = 0; j < modes_.size(); ++j) lambda_(static_cast<Eigen::Index>(j)) = modes_[j].k2;
}

FormField GalerkinBasis::field(std::size_t j) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size()));
  g(static_cast<Eigen::Index>(j)) = 1.0;
  return synthesize(g);
}

FormField GalerkinBasis::synthesize(const Eigen::VectorXd& g) const {
  if (static_cast<std::size_t>(g.size()) != size()) throw UsageError("synthesize: coefficient count mismatch");
  FormField out(grid_, degree_);
  const double r = 1.0 / std::numbers::sqrt2;
  for (std::size_t j = 0; j < size(); ++j) {
    const BasisMode& b = modes_[j];
    const double a = r * g(static_cast<Eigen::Index>(j));
    const std::size_t mir = grid_->mirror(b.slot);
    for (std::size_t c = 0; c < b.e.size(); ++c) {
      const cplx v = b.sine ? cplx(0.0, -a * b.e[c]) : cplx(a * b.e[c], 0.0);
      out.at(static_cast<int>(c), b.slot) += v;
      out.at(static_cast<int>(c), mir) += std::conj(v);
    }
  }
  return out;
}

Eigen::VectorXd GalerkinBasis::project(const FormField& u) const {
  if (u.degree() != degree_ || !(u.grid() == *grid_)) throw UsageError("project: field does not match the basis");
  Eigen::VectorXd out(static_cast<Eigen::Index>(size()));
  for (std::size_t j = 0; j < size(); ++j) {
    const BasisMode& b = modes_[j];
    cplx z = 0.0;
    for (std::size_t c = 0; c < b.e.size(); ++c) z += u.at(static_cast<int>(c), b.slot) * b.e[c];
    out(static_cast<Eigen::Index>(j)) = b.sine ? -std::numbers::sqrt2 * z.imag() : std::numbers::sqrt2 * z.real();
  }
  return out;
}

GalerkinBasis GalerkinBasis::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size()) throw UsageError("permuted: permutation size mismatch");
  std::vector<char> seen(size(), 0);
  std::vector<BasisMode> modes;
  modes.reserve(size());
  for (std::size_t p : perm) {
    if (p >= size() || seen[p]) throw UsageError("permuted: not a permutation");
    seen[p] = 1;
    modes.push_back(modes_[p]);
  }
  return GalerkinBasis(grid_, degree_, std::move(modes));
}

std::vector<std::size_t> GalerkinBasis::positions_in(const GalerkinBasis& other) const {
  using Key = std::tuple<std::size_t, int, bool>;
  std::map<Key, std::size_t> where;
  for (std::size_t j = 0; j < other.size(); ++j) where[{other.modes_[j].slot, other.modes_[j].fibre, other.modes_[j].sine}] = j;
  std::vector<std::size_t> out;
  out.reserve(size());
  for (const auto& b : modes_) {
    const auto it = where.find({b.slot, b.fibre, b.sine});
    if (it == where.end() || !(*other.grid_ == *grid_)) throw UsageError("positions_in: mode missing from the other basis");
    out.push_back(it->second);
  }
  return out;
}

std::size_t max_basis_size(const GridPtr& grid, int degree) { return enumerate_modes(*grid, degree).size(); }

GalerkinBasis build_basis(const GridPtr& grid, int degree, std::optional<std::size_t> m) {
  if (degree < 0 || degree > grid->dim()) throw ParameterError("build_basis: degree outside [0, n]");
  auto modes = enumerate_modes(*grid, degree);
  if (m) {
    if (*m > modes.size()) {
      throw ParameterError("build_basis: m = " + std::to_string(*m) + " exceeds the band-limited dimension " +
                           std::to_string(modes.size()));
    }
    modes.resize(*m);
  }
  return GalerkinBasis(grid, degree, std::move(modes));
}

}  // namespace hodge
