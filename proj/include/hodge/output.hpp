#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hodge/bochner.hpp"

namespace hodge {

// Snapshot directory: u_NNNNNN.hpf (and p_NNNNNN.hpf when pressure is present)
// for every `stride`-th sample plus manifest.csv with columns
// t,file,energy,enstrophy (enstrophy = |grad u|^2).
void write_solution(const std::filesystem::path& dir, const TimeSeriesSolution& sol, std::size_t stride = 1);

struct SeriesRow {
  double t;
  std::string quantity;
  double value;
};
// Columns t,quantity,value.
void write_series_csv(const std::filesystem::path& path, const std::vector<SeriesRow>& rows);

struct NormRow {
  std::string experiment_id;
  std::string norm_name;
  int k;
  int s;
  double p;
  double value;
};
// Columns experiment_id,norm_name,k,s,p,value.
void write_norms_csv(const std::filesystem::path& path, const std::vector<NormRow>& rows);

struct PlotData {
  const TimeSeriesSolution* solution = nullptr;
  BochnerIndex bochner{0, 1, BochnerRole::velocity};
  std::vector<double> gn_ratios;
  std::vector<double> newton_residuals;
};

// One CSV per quantity in `dir`, columns (t or iteration, value). Quantities:
// energy, grad-energy, bochner (norm over [0, t] at up to 20 checkpoints),
// gn-ratios, newton-residuals. UsageError for unknown quantities or missing data.
std::vector<std::filesystem::path> emit_plot_data(const std::filesystem::path& dir, const PlotData& data,
                                                  const std::vector<std::string>& quantities);

}  // namespace hodge
