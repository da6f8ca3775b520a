#pragma once

#include <functional>

#include "hodge/solver.hpp"

namespace hodge::detail {

using Rhs = std::function<Eigen::VectorXd(const Eigen::VectorXd& g, double t)>;

void check_initial_datum(const GalerkinBasis& basis, const FormField& u0);
void check_data(const GalerkinBasis& basis, const TimeDependentField& f, const char* what);

// Integrating-factor IMEX stepping of dg/dt = -rates * g + rhs(g, t).
GalerkinRun integrate(const GalerkinBasis& basis, const Eigen::VectorXd& g0, const SolverConfig& cfg,
                      const Eigen::VectorXd& rates, const Rhs& rhs);

}  // namespace hodge::detail
