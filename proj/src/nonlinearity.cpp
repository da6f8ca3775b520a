#include "hodge/nonlinearity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "hodge/bochner.hpp"
#include "hodge/complex_ops.hpp"
#include "hodge/errors.hpp"
#include "hodge/hodge_operators.hpp"
#include "hodge/multi_index.hpp"
#include "hodge/random_field.hpp"
#include "hodge/transform.hpp"

namespace hodge {

BilinearMap::BilinearMap(int dim, int deg1, int deg2, int deg_out)
    : dim_(dim), deg1_(deg1), deg2_(deg2), out_(deg_out) {
  for (int d : {deg1, deg2, deg_out}) {
    if (d < 0 || d > dim) throw UsageError("BilinearMap: degree outside [0, n]");
  }
  n1_ = binomial(dim, deg1);
  n2_ = binomial(dim, deg2);
  nout_ = binomial(dim, deg_out);
  tensor_.assign(static_cast<std::size_t>(n1_) * n2_ * nout_, 0.0);
}

std::size_t BilinearMap::offset(int a, int b, int c) const {
  if (a < 0 || a >= n1_ || b < 0 || b >= n2_ || c < 0 || c >= nout_) {
    throw UsageError("BilinearMap: component index out of range");
  }
  return (static_cast<std::size_t>(a) * n2_ + b) * nout_ + c;
}

void BilinearMap::set(int a, int b, int c, double value) { tensor_[offset(a, b, c)] = value; }
double BilinearMap::get(int a, int b, int c) const { return tensor_[offset(a, b, c)]; }

bool BilinearMap::is_zero() const {
  return std::all_of(tensor_.begin(), tensor_.end(), [](double v) { return v == 0.0; });
}

std::vector<kernels::TensorEntry> BilinearMap::entries() const {
  std::vector<kernels::TensorEntry> out;
  for (int a = 0; a < n1_; ++a)
    for (int b = 0; b < n2_; ++b)
      for (int c = 0; c < nout_; ++c)
        if (const double v = get(a, b, c); v != 0.0) out.push_back({a, b, c, v});
  return out;
}

double BilinearMap::operator_bound() const {
  Eigen::MatrixXd flat(nout_, n1_ * n2_);
  for (int a = 0; a < n1_; ++a)
    for (int b = 0; b < n2_; ++b)
      for (int c = 0; c < nout_; ++c) flat(c, a * n2_ + b) = get(a, b, c);
  return Eigen::JacobiSVD<Eigen::MatrixXd>(flat).singularValues()(0);
}

FormField BilinearMap::apply(const FormField& u, const FormField& v) const {
  if (u.degree() != deg1_ || v.degree() != deg2_ || u.grid().dim() != dim_) {
    throw UsageError("BilinearMap::apply: argument degrees do not match the map");
  }
  if (!(u.grid() == v.grid())) throw UsageError("BilinearMap::apply: grids differ");
  FormField out(u.grid_ptr(), out_);
  const auto terms = entries();
  if (terms.empty()) return out;
  const PhysicalField pu = to_physical(u);
  const PhysicalField pv = to_physical(v);
  PhysicalField po{u.grid_ptr(), out_, std::vector<double>(out.data().size(), 0.0)};
  kernels::parallel::contract(terms, pu.values, pv.values, po.values, u.grid().size());
  out = from_physical(po);
  apply_dealias(out);
  return out;
}

BilinearMap BilinearMap::parse(std::istream& is) {
  std::string line;
  std::optional<BilinearMap> map;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!map) {
      int n, d1, d2, d3;
      if (first != "bilinear" || !(ls >> n >> d1 >> d2 >> d3)) {
        throw UsageError("bilinear map file: expected header 'bilinear <n> <deg1> <deg2> <deg_out>' at line " +
                         std::to_string(lineno));
      }
      map.emplace(n, d1, d2, d3);
      continue;
    }
    int a, b, c;
    double v;
    std::istringstream es(line);
    if (!(es >> a >> b >> c >> v)) {
      throw UsageError("bilinear map file: malformed entry at line " + std::to_string(lineno));
    }
    map->set(a, b, c, v);
  }
  if (!map) throw UsageError("bilinear map file: missing header");
  return *map;
}

void BilinearMap::write(std::ostream& os) const {
  os << "bilinear " << dim_ << ' ' << deg1_ << ' ' << deg2_ << ' ' << out_ << '\n';
  os.precision(17);
  for (const auto& e : entries()) os << e.i << ' ' << e.j << ' ' << e.c << ' ' << e.value << '\n';
}

bool NonlinearityConfig::is_zero() const {
  return (!m1 || m1->is_zero()) && (!m2 || m2->is_zero());
}

void NonlinearityConfig::validate() const {
  const int i = degree;
  if (m1 && (m1->dim() != dim || m1->source1_degree() != i + 1 || m1->source2_degree() != i ||
             m1->target_degree() != i)) {
    throw UsageError("NonlinearityConfig: M1 must map (E^{i+1}, E^i) -> E^i");
  }
  if (m2 && (m2->dim() != dim || i < 1 || m2->source1_degree() != i || m2->source2_degree() != i ||
             m2->target_degree() != i - 1)) {
    throw UsageError("NonlinearityConfig: M2 must map (E^i, E^i) -> E^{i-1} with i >= 1");
  }
}

NonlinearityConfig navier_stokes_preset(int dim) {
  NonlinearityConfig cfg;
  cfg.dim = dim;
  cfg.degree = 1;
  cfg.preset = "navier-stokes-i1";
  BilinearMap m1(dim, 2, 1, 1);
  const MultiIndexTable pairs(dim, 2);
  for (int I = 0; I < pairs.size(); ++I) {
    const auto ab = pairs.axes(I);
    // (i_u w)_b = sum_a u_a w_{ab}
    m1.set(I, ab[0], ab[1], 1.0);
    m1.set(I, ab[1], ab[0], -1.0);
  }
  BilinearMap m2(dim, 1, 1, 0);
  for (int a = 0; a < dim; ++a) m2.set(a, a, 0, 0.5);
  cfg.m1 = m1;
  cfg.m2 = m2;
  return cfg;
}

NonlinearityConfig zero_preset(int dim, int degree) {
  NonlinearityConfig cfg;
  cfg.dim = dim;
  cfg.degree = degree;
  cfg.preset = "zero";
  return cfg;
}

NonlinearityConfig random_preset(int dim, int degree, std::uint64_t seed) {
  NonlinearityConfig cfg;
  cfg.dim = dim;
  cfg.degree = degree;
  cfg.preset = "random:" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto fill = [&](BilinearMap& m) {
    for (int a = 0; a < m.source1_components(); ++a)
      for (int b = 0; b < m.source2_components(); ++b)
        for (int c = 0; c < m.target_components(); ++c) m.set(a, b, c, normal(rng));
  };
  if (degree < dim) {
    BilinearMap m1(dim, degree + 1, degree, degree);
    fill(m1);
    cfg.m1 = m1;
  }
  if (degree >= 1) {
    BilinearMap m2(dim, degree, degree, degree - 1);
    fill(m2);
    cfg.m2 = m2;
  }
  return cfg;
}

NonlinearityConfig preset_by_name(const std::string& name, int dim, int degree) {
  if (name == "navier-stokes-i1" || name == "navier-stokes") {
    if (degree != 1) throw UsageError("preset navier-stokes-i1 requires degree 1");
    return navier_stokes_preset(dim);
  }
  if (name == "zero") return zero_preset(dim, degree);
  if (name.rfind("random", 0) == 0) {
    std::uint64_t seed = 1;
    if (const auto colon = name.find(':'); colon != std::string::npos) seed = std::stoull(name.substr(colon + 1));
    return random_preset(dim, degree, seed);
  }
  throw UsageError("unknown nonlinearity preset '" + name + "'");
}

namespace {

void require_degree(const FormField& v, const NonlinearityConfig& cfg) {
  if (v.degree() != cfg.degree || v.grid().dim() != cfg.dim) {
    throw UsageError("nonlinearity: field degree/dimension does not match the configuration");
  }
}

}  // namespace

FormField apply_N(const FormField& v, const NonlinearityConfig& cfg) {
  require_degree(v, cfg);
  FormField out(v.grid_ptr(), v.degree());
  if (cfg.m1 && !cfg.m1->is_zero()) out += cfg.m1->apply(exterior_derivative(v), v);
  if (cfg.m2 && !cfg.m2->is_zero()) out += exterior_derivative(cfg.m2->apply(v, v));
  out.set_time(v.time());
  return out;
}

FormField apply_B(const FormField& w, const FormField& v, const NonlinearityConfig& cfg) {
  require_degree(w, cfg);
  require_degree(v, cfg);
  FormField out(v.grid_ptr(), v.degree());
  if (cfg.m1 && !cfg.m1->is_zero()) {
    out += cfg.m1->apply(exterior_derivative(w), v);
    out += cfg.m1->apply(exterior_derivative(v), w);
  }
  if (cfg.m2 && !cfg.m2->is_zero()) {
    out += exterior_derivative(cfg.m2->apply(w, v) + cfg.m2->apply(v, w));
  }
  return out;
}

ContinuityReport empirical_continuity_bound(const NonlinearityConfig& cfg, const GridPtr& grid, int trials, int k,
                                            int s, int band, std::uint64_t seed) {
  if (s < 1 || k < 0) throw ParameterError("continuity bound: need s >= 1 and k >= 0");
  if (!(2.0 * s + k > grid->dim() / 2.0 - 1.0)) throw ParameterError("continuity bound: need 2s + k > n/2 - 1");
  cfg.validate();
  std::mt19937_64 rng(seed);
  ContinuityReport r;
  double total = 0.0;
  const BochnerIndex force{k, s - 1, BochnerRole::force};
  const BochnerIndex vel{k + 2, s - 1, BochnerRole::velocity};
  for (int t = 0; t < trials; ++t) {
    const FormField w = helmholtz_project(random_form(grid, cfg.degree, band, rng));
    const FormField v = helmholtz_project(random_form(grid, cfg.degree, band, rng));
    const double num = bochner_norm(stationary_series(apply_B(w, v, cfg), 1.0, s - 1), force);
    const double den = bochner_norm(stationary_series(w, 1.0, s - 1), vel) *
                       bochner_norm(stationary_series(v, 1.0, s - 1), vel);
    const double ratio = den > 0.0 ? num / den : 0.0;
    r.max_ratio = std::max(r.max_ratio, ratio);
    total += ratio;
  }
  r.trials = trials;
  r.mean_ratio = trials > 0 ? total / trials : 0.0;
  return r;
}

FormField convective_derivative(const FormField& w, const FormField& u) {
  if (w.degree() != 1 || u.degree() != 1) throw UsageError("convective_derivative: 1-forms required");
  w.require_same_space(u, "convective_derivative");
  const auto& g = u.grid();
  const int n = g.dim();
  const std::size_t points = g.size();
  const PhysicalField pw = to_physical(w);
  PhysicalField out{u.grid_ptr(), 1, std::vector<double>(u.data().size(), 0.0)};
  std::vector<double> grad(points);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      // d_a u_b
      std::vector<cplx> d(points, 0.0);
      kernels::parallel::add_derivative(d, u.component(b), g.axis_wavenumbers(a), 1.0, false);
      inverse_transform(d, grad, g);
      const auto wa = pw.component(a);
      auto ob = out.component(b);
      for (std::size_t x = 0; x < points; ++x) ob[x] += wa[x] * grad[x];
    }
  }
  FormField r = from_physical(out);
  apply_dealias(r);
  return r;
}

TrilinearReport trilinear_form(const FormField& w, const FormField& u, const NonlinearityConfig& cfg) {
  TrilinearReport r;
  r.raw = inner_product(apply_B(w, u, cfg), u);
  if (cfg.preset == "navier-stokes-i1") r.convective = inner_product(convective_derivative(w, u), u);
  return r;
}

}  // namespace hodge
