#ifndef COLLOC_REGISTRY_HPP
#define COLLOC_REGISTRY_HPP

#include <map>
#include <string>

#include "colloc/expr.hpp"
#include "colloc/solver.hpp"

namespace colloc {

/// Built-in named problems:
///   example1: y' = y,      y(0) = 1, tf = 1, exact e^t
///   example2: y' = 2y/t^3, y(1) = 1, tf = 3, exact e^{1 - 1/t^2}
const std::map<std::string, IVProblem>& builtin_problems();

/// Throws std::invalid_argument for unknown names.
const IVProblem& problem_by_name(const std::string& name);

/// Scalar problem from a parsed right-hand side; carries no exact solution.
IVProblem problem_from_expr(const expr::Node& rhs, double t0, double y0, double tf,
                            std::string name = "custom");

} // namespace colloc

#endif
