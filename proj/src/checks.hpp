#pragma once

#include <cstdint>
#include <string>

#include "hodge/galerkin.hpp"
#include "hodge/report.hpp"

namespace hodge::detail {

struct Context {
  std::uint64_t seed = 1;
  int dim = 2;
  int res = 32;
  SolverConfig solver;
  int gn_fields = 100;
  double newton_horizon = 0.25;
};

[[nodiscard]] bool is_check_group(const std::string& name);
void run_group(const std::string& name, const Context& ctx, VerificationReport& report);

}  // namespace hodge::detail
