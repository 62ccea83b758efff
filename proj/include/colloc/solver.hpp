#ifndef COLLOC_SOLVER_HPP
#define COLLOC_SOLVER_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colloc/tableau.hpp"

namespace colloc {

using State = std::vector<double>;
using RhsFn = std::function<void(double t, const State& y, State& dydt)>;
using ExactFn = std::function<State(double t)>;
/// Row-major d x d Jacobian df/dy.
using JacobianFn = std::function<std::vector<double>(double t, const State& y)>;

struct IVProblem {
    std::string name;
    RhsFn rhs;
    double t0 = 0.0;
    State y0;
    double tf = 1.0;
    ExactFn exact; // optional
};

/// Validates dimension/interval and, when an exact solution is supplied,
/// that exact(t0) matches y0 to 1e-12.
IVProblem make_problem(std::string name, RhsFn rhs, double t0, State y0,
                       double tf, ExactFn exact = nullptr);

enum class IterationStrategy { FixedPoint, SimplifiedNewton };

struct SolverConfig {
    double tol = 1e-14;
    int max_iter = 100;
    IterationStrategy strategy = IterationStrategy::FixedPoint;
    JacobianFn jacobian; // optional; forward differences otherwise
};

struct StepResult {
    State y_next;
    std::vector<State> stages;
    int iterations = 0;
    bool converged = false;
    double residual = 0.0; // scaled stage defect at exit
};

class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(int step_index_, double residual_, State y_estimate_);
    int step_index;      // 1-based failing step
    double residual;
    State y_estimate;    // state after pushing the failed step through
};

/// One implicit RK step: solve the stage system
///   Y_i = yn + h Σ_j a_ij f(tn + c_j h, Y_j)
/// to the scaled-defect tolerance, then y_next = yn + h Σ_j b_j f(...).
/// Does not throw on iteration-cap exhaustion; inspect `converged`.
StepResult irk_step(const ButcherTableau& tableau, const RhsFn& f, double tn,
                    const State& yn, double h, const SolverConfig& config = {});

enum class FailurePolicy { Throw, Record };

struct IntegrationResult {
    State y_final;
    std::vector<int> iterations; // per step
    bool converged = true;
    int first_failed_step = 0;   // 1-based, 0 if none
    int total_iterations() const;
};

/// Fixed-step integration with h = (tf - t0)/n_steps. With
/// FailurePolicy::Throw (the default) a step that exhausts its iteration cap
/// raises NonConvergenceError carrying the failing step index; with Record
/// the step is pushed through with its last iterate and flagged.
IntegrationResult integrate(const IVProblem& problem, const ButcherTableau& tableau,
                            int n_steps, const SolverConfig& config = {},
                            FailurePolicy policy = FailurePolicy::Throw);

/// Max-norm of y_final - exact(tf). Requires problem.exact.
double terminal_error(const IVProblem& problem, const State& y_final);

struct OrderEstimate {
    double slope = 0.0;
    std::vector<int> steps;
    std::vector<double> errors;
};

/// Least-squares slope of log(error) against log(h) over the given step
/// counts; for a method of order p the slope is ~p. Throws std::domain_error
/// when any error sits at the rounding floor.
OrderEstimate estimate_order(const ButcherTableau& tableau, const IVProblem& problem,
                             const std::vector<int>& step_counts,
                             const SolverConfig& config = {});

} // namespace colloc

#endif
