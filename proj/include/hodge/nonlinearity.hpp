#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hodge/form_field.hpp"
#include "hodge/kernels.hpp"

namespace hodge {

// Constant fibre-wise bilinear map (E^{deg1}, E^{deg2}) -> E^{out} on T^n,
// stored as a dense tensor c[a][b][c_out] over component indices.
class BilinearMap {
 public:
  BilinearMap(int dim, int deg1, int deg2, int deg_out);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int source1_degree() const { return deg1_; }
  [[nodiscard]] int source2_degree() const { return deg2_; }
  [[nodiscard]] int target_degree() const { return out_; }
  [[nodiscard]] int source1_components() const { return n1_; }
  [[nodiscard]] int source2_components() const { return n2_; }
  [[nodiscard]] int target_components() const { return nout_; }

  void set(int a, int b, int c, double value);
  [[nodiscard]] double get(int a, int b, int c) const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::vector<kernels::TensorEntry> entries() const;

  // Largest singular value of the tensor flattened to nout x (n1 n2); bounds
  // |M(u, v)| <= c_M |u| |v| pointwise.
  [[nodiscard]] double operator_bound() const;

  // Pointwise product on the physical grid, truncated to the dealiasing mask.
  // Inputs are expected to be band-limited to the mask (two-thirds rule).
  [[nodiscard]] FormField apply(const FormField& u, const FormField& v) const;

  // Text format:
  //   # comments
  //   bilinear <n> <deg1> <deg2> <deg_out>
  //   <a> <b> <c> <value>      (one line per nonzero entry)
  [[nodiscard]] static BilinearMap parse(std::istream& is);
  void write(std::ostream& os) const;

 private:
  [[nodiscard]] std::size_t offset(int a, int b, int c) const;

  int dim_, deg1_, deg2_, out_;
  int n1_, n2_, nout_;
  std::vector<double> tensor_;
};

// Pair (M1, M2) with M1: (E^{i+1}, E^i) -> E^i and M2: (E^i, E^i) -> E^{i-1}.
// M1 is absent at i = n and M2 at i = 0.
struct NonlinearityConfig {
  int dim = 2;
  int degree = 1;
  std::string preset = "zero";
  std::optional<BilinearMap> m1;
  std::optional<BilinearMap> m2;

  [[nodiscard]] bool is_zero() const;
  void validate() const;
};

// "navier-stokes-i1": M1(w, u) = interior product of u with the 2-form w,
// M2(u, v) = (u . v) / 2, so N(u) = i_u du + d |u|^2/2 = (u . grad) u.
[[nodiscard]] NonlinearityConfig navier_stokes_preset(int dim);
[[nodiscard]] NonlinearityConfig zero_preset(int dim, int degree);
// Gaussian tensors of the right shapes (generic non-Navier-Stokes map).
[[nodiscard]] NonlinearityConfig random_preset(int dim, int degree, std::uint64_t seed);
// By name: "navier-stokes-i1" (alias "navier-stokes"), "zero", "random[:seed]".
[[nodiscard]] NonlinearityConfig preset_by_name(const std::string& name, int dim, int degree);

// N(v) = M1(d v, v) + d M2(v, v).
[[nodiscard]] FormField apply_N(const FormField& v, const NonlinearityConfig& cfg);
// B(w, v) = M1(d w, v) + M1(d v, w) + d (M2(w, v) + M2(v, w)).
[[nodiscard]] FormField apply_B(const FormField& w, const FormField& v, const NonlinearityConfig& cfg);

struct ContinuityReport {
  int trials = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

// Ratio ||B(w, v)||_{for; k, s-1} / (||w||_{vel; k+2, s-1} ||v||_{vel; k+2, s-1})
// over random coclosed stationary pairs on [0, 1]. ParameterError unless
// s >= 1 and 2s + k > n/2 - 1.
[[nodiscard]] ContinuityReport empirical_continuity_bound(const NonlinearityConfig& cfg, const GridPtr& grid,
                                                          int trials, int k, int s, int band, std::uint64_t seed);

struct TrilinearReport {
  double raw = 0.0;                  // (B(w, u), u)
  std::optional<double> convective;  // ((w . grad) u, u), Navier-Stokes preset only
};

[[nodiscard]] TrilinearReport trilinear_form(const FormField& w, const FormField& u, const NonlinearityConfig& cfg);

// (w . grad) u for 1-forms, product truncated to the dealiasing mask.
[[nodiscard]] FormField convective_derivative(const FormField& w, const FormField& u);

}  // namespace hodge
