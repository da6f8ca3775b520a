#include "hodge/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "hodge/errors.hpp"
#include "hodge/snapshot_io.hpp"
#include "hodge/sobolev.hpp"

namespace hodge {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out.precision(17);
  return out;
}

std::string numbered(const char* prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%06zu.hpf", prefix, n);
  return buf;
}

// Prefix [0, t_n] of a solution, keeping cached derivatives.
TimeSeriesSolution prefix(const TimeSeriesSolution& sol, std::size_t n) {
  const std::vector<double> t(sol.times().begin(), sol.times().begin() + n + 1);
  const std::vector<FormField> u(sol.velocity().begin(), sol.velocity().begin() + n + 1);
  TimeSeriesSolution out(t, u);
  std::vector<std::vector<FormField>> du(sol.derivative_order());
  for (int j = 1; j <= sol.derivative_order(); ++j)
    for (std::size_t i = 0; i <= n; ++i) du[j - 1].push_back(sol.derivative(j, i));
  if (!du.empty()) out.set_derivatives(std::move(du));
  return out;
}

}  // namespace

void write_solution(const std::filesystem::path& dir, const TimeSeriesSolution& sol, std::size_t stride) {
  if (stride == 0) throw UsageError("write_solution: stride must be positive");
  std::filesystem::create_directories(dir);
  auto manifest = open_csv(dir / "manifest.csv");
  manifest << "t,file,energy,enstrophy\n";
  for (std::size_t n = 0; n < sol.samples(); n += stride) {
    const FormField& u = sol.velocity(n);
    const std::string name = numbered("u", n);
    write_snapshot(dir / name, u);
    if (sol.has_pressure()) write_snapshot(dir / numbered("p", n), sol.pressure()[n]);
    const double grad = nabla_norm_spectral(u, 1.0);
    manifest << sol.times()[n] << ',' << name << ',' << inner_product(u, u) << ',' << grad * grad << '\n';
  }
}

void write_series_csv(const std::filesystem::path& path, const std::vector<SeriesRow>& rows) {
  auto out = open_csv(path);
  out << "t,quantity,value\n";
  for (const auto& r : rows) out << r.t << ',' << r.quantity << ',' << r.value << '\n';
}

void write_norms_csv(const std::filesystem::path& path, const std::vector<NormRow>& rows) {
  auto out = open_csv(path);
  out << "experiment_id,norm_name,k,s,p,value\n";
  for (const auto& r : rows) {
    out << r.experiment_id << ',' << r.norm_name << ',' << r.k << ',' << r.s << ',';
    if (r.p == kInfinity) {
      out << "inf";
    } else {
      out << r.p;
    }
    out << ',' << r.value << '\n';
  }
}

std::vector<std::filesystem::path> emit_plot_data(const std::filesystem::path& dir, const PlotData& data,
                                                  const std::vector<std::string>& quantities) {
  static const std::set<std::string> known = {"energy", "grad-energy", "bochner", "gn-ratios", "newton-residuals"};
  for (const auto& q : quantities) {
    if (!known.count(q)) throw UsageError("emit_plot_data: unknown quantity '" + q + "'");
    const bool needs_solution = q == "energy" || q == "grad-energy" || q == "bochner";
    if (needs_solution && !data.solution) throw UsageError("emit_plot_data: '" + q + "' needs a solution");
    if ((q == "gn-ratios" && data.gn_ratios.empty()) || (q == "newton-residuals" && data.newton_residuals.empty()))
      throw UsageError("emit_plot_data: no data for '" + q + "'");
  }
  std::vector<std::filesystem::path> written;
  for (const auto& q : quantities) {
    const auto path = dir / (q + ".csv");
    auto out = open_csv(path);
    if (q == "gn-ratios" || q == "newton-residuals") {
      const auto& v = q == "gn-ratios" ? data.gn_ratios : data.newton_residuals;
      out << "iteration,value\n";
      for (std::size_t i = 0; i < v.size(); ++i) out << i << ',' << v[i] << '\n';
    } else {
      const TimeSeriesSolution& sol = *data.solution;
      out << "t,value\n";
      if (q == "bochner") {
        const std::size_t last = sol.samples() - 1;
        const std::size_t every = std::max<std::size_t>(1, last / 20);
        for (std::size_t n = every; n <= last; n += every)
          out << sol.times()[n] << ',' << bochner_norm(prefix(sol, n), data.bochner) << '\n';
      } else {
        for (std::size_t n = 0; n < sol.samples(); ++n) {
          const FormField& u = sol.velocity(n);
          const double v = q == "energy" ? inner_product(u, u) : std::pow(nabla_norm_spectral(u, 1.0), 2);
          out << sol.times()[n] << ',' << v << '\n';
        }
      }
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace hodge
