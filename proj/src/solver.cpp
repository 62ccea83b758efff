#include "colloc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace colloc {

namespace {

double max_norm(const State& v)
{
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

// Dense LU with partial pivoting; solves in place.
class LuFactors {
public:
    explicit LuFactors(std::vector<double> matrix, int n)
        : lu_(std::move(matrix)), piv_(n), n_(n)
    {
        std::iota(piv_.begin(), piv_.end(), 0);
        for (int col = 0; col < n_; ++col) {
            int pivot = col;
            double best = std::fabs(at(col, col));
            for (int r = col + 1; r < n_; ++r) {
                const double v = std::fabs(at(r, col));
                if (v > best) { best = v; pivot = r; }
            }
            if (best == 0.0) { singular_ = true; return; }
            if (pivot != col) {
                for (int k = 0; k < n_; ++k) std::swap(at(pivot, k), at(col, k));
                std::swap(piv_[pivot], piv_[col]);
            }
            for (int r = col + 1; r < n_; ++r) {
                const double factor = at(r, col) / at(col, col);
                at(r, col) = factor;
                for (int k = col + 1; k < n_; ++k) at(r, k) -= factor * at(col, k);
            }
        }
    }

    bool singular() const { return singular_; }

    std::vector<double> solve(const std::vector<double>& rhs) const
    {
        std::vector<double> x(n_);
        for (int i = 0; i < n_; ++i) x[i] = rhs[piv_[i]];
        for (int i = 1; i < n_; ++i)
            for (int k = 0; k < i; ++k) x[i] -= at(i, k) * x[k];
        for (int i = n_ - 1; i >= 0; --i) {
            for (int k = i + 1; k < n_; ++k) x[i] -= at(i, k) * x[k];
            x[i] /= at(i, i);
        }
        return x;
    }

private:
    double at(int r, int c) const { return lu_[static_cast<std::size_t>(r) * n_ + c]; }
    double& at(int r, int c) { return lu_[static_cast<std::size_t>(r) * n_ + c]; }

    std::vector<double> lu_;
    std::vector<int> piv_;
    int n_;
    bool singular_ = false;
};

std::vector<double> finite_difference_jacobian(const RhsFn& f, double t, const State& y)
{
    const int d = static_cast<int>(y.size());
    const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
    State base(d), perturbed(d), yp = y;
    f(t, y, base);
    std::vector<double> jac(static_cast<std::size_t>(d) * d);
    for (int col = 0; col < d; ++col) {
        const double step = sqrt_eps * (1.0 + std::fabs(y[col]));
        yp[col] = y[col] + step;
        f(t, yp, perturbed);
        yp[col] = y[col];
        for (int row = 0; row < d; ++row)
            jac[static_cast<std::size_t>(row) * d + col] = (perturbed[row] - base[row]) / step;
    }
    return jac;
}

} // namespace

namespace {

std::string nonconvergence_message(int step_index, double residual)
{
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "implicit stage iteration did not converge at step %d (residual %.3e)",
                  step_index, residual);
    return buf;
}

} // namespace

NonConvergenceError::NonConvergenceError(int step_index_, double residual_, State y_estimate_)
    : std::runtime_error(nonconvergence_message(step_index_, residual_)),
      step_index(step_index_), residual(residual_), y_estimate(std::move(y_estimate_))
{
}

IVProblem make_problem(std::string name, RhsFn rhs, double t0, State y0,
                       double tf, ExactFn exact)
{
    if (y0.empty()) throw std::invalid_argument("make_problem: empty initial state");
    if (!(tf > t0)) throw std::invalid_argument("make_problem: tf must exceed t0");
    if (exact) {
        const State at_t0 = exact(t0);
        if (at_t0.size() != y0.size())
            throw std::invalid_argument("make_problem: exact(t0) dimension mismatch");
        for (std::size_t i = 0; i < y0.size(); ++i)
            if (std::fabs(at_t0[i] - y0[i]) > 1e-12 * (1.0 + std::fabs(y0[i])))
                throw std::invalid_argument("make_problem: exact(t0) != y0");
    }
    IVProblem p;
    p.name = std::move(name);
    p.rhs = std::move(rhs);
    p.t0 = t0;
    p.y0 = std::move(y0);
    p.tf = tf;
    p.exact = std::move(exact);
    return p;
}

StepResult irk_step(const ButcherTableau& tableau, const RhsFn& f, double tn,
                    const State& yn, double h, const SolverConfig& config)
{
    if (!(h > 0)) throw std::invalid_argument("irk_step: h must be positive");
    if (!(config.tol > 0) || config.max_iter < 1)
        throw std::invalid_argument("irk_step: need tol > 0 and max_iter >= 1");
    const int s = tableau.s;
    const int d = static_cast<int>(yn.size());
    const double scale = 1.0 + max_norm(yn);

    StepResult result;
    result.stages.assign(s, yn);
    std::vector<State> fvals(s, State(d));

    auto eval_stages = [&]() {
        for (int i = 0; i < s; ++i)
            f(tn + tableau.c[i] * h, result.stages[i], fvals[i]);
    };

    auto stage_target = [&](int i, State& out) {
        // yn + h Σ_j a_ij f_j
        out = yn;
        for (int j = 0; j < s; ++j) {
            const double w = h * tableau.a(i, j);
            if (w == 0.0) continue;
            for (int k = 0; k < d; ++k) out[k] += w * fvals[j][k];
        }
    };

    if (config.strategy == IterationStrategy::FixedPoint) {
        State target(d);
        for (int iter = 1; iter <= config.max_iter; ++iter) {
            eval_stages();
            double defect = 0.0;
            for (int i = 0; i < s; ++i) {
                stage_target(i, target);
                for (int k = 0; k < d; ++k)
                    defect = std::max(defect, std::fabs(target[k] - result.stages[i][k]));
                result.stages[i] = target;
            }
            result.iterations = iter;
            result.residual = defect / scale;
            if (result.residual <= config.tol || !std::isfinite(defect)) {
                result.converged = result.residual <= config.tol;
                break;
            }
        }
    } else {
        // Simplified Newton: Jacobian frozen at (tn, yn).
        const std::vector<double> jac = config.jacobian
            ? config.jacobian(tn, yn)
            : finite_difference_jacobian(f, tn, yn);
        const int n = s * d;
        std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                const double w = h * tableau.a(i, j);
                for (int r = 0; r < d; ++r)
                    for (int cidx = 0; cidx < d; ++cidx)
                        m[static_cast<std::size_t>(i * d + r) * n + j * d + cidx] =
                            -w * jac[static_cast<std::size_t>(r) * d + cidx];
            }
        for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k) * n + k] += 1.0;
        const LuFactors lu(std::move(m), n);
        if (lu.singular())
            throw std::runtime_error("irk_step: singular simplified-Newton matrix");

        std::vector<double> g(n);
        State target(d);
        for (int iter = 1; iter <= config.max_iter; ++iter) {
            eval_stages();
            double defect = 0.0;
            for (int i = 0; i < s; ++i) {
                stage_target(i, target);
                for (int k = 0; k < d; ++k) {
                    const double gk = result.stages[i][k] - target[k];
                    g[i * d + k] = gk;
                    defect = std::max(defect, std::fabs(gk));
                }
            }
            result.iterations = iter;
            result.residual = defect / scale;
            if (result.residual <= config.tol || !std::isfinite(defect)) {
                result.converged = result.residual <= config.tol;
                break;
            }
            const std::vector<double> delta = lu.solve(g);
            for (int i = 0; i < s; ++i)
                for (int k = 0; k < d; ++k)
                    result.stages[i][k] -= delta[i * d + k];
        }
    }

    eval_stages();
    result.y_next = yn;
    for (int j = 0; j < s; ++j) {
        const double w = h * tableau.b[j];
        for (int k = 0; k < d; ++k) result.y_next[k] += w * fvals[j][k];
    }
    return result;
}

int IntegrationResult::total_iterations() const
{
    int total = 0;
    for (int it : iterations) total += it;
    return total;
}

IntegrationResult integrate(const IVProblem& problem, const ButcherTableau& tableau,
                            int n_steps, const SolverConfig& config, FailurePolicy policy)
{
    if (n_steps < 1) throw std::invalid_argument("integrate: n_steps must be >= 1");
    const double h = (problem.tf - problem.t0) / n_steps;

    IntegrationResult result;
    result.y_final = problem.y0;
    result.iterations.reserve(n_steps);
    for (int step = 1; step <= n_steps; ++step) {
        const double tn = problem.t0 + (step - 1) * h;
        StepResult sr = irk_step(tableau, problem.rhs, tn, result.y_final, h, config);
        result.iterations.push_back(sr.iterations);
        result.y_final = std::move(sr.y_next);
        if (!sr.converged) {
            if (policy == FailurePolicy::Throw)
                throw NonConvergenceError(step, sr.residual, result.y_final);
            result.converged = false;
            if (result.first_failed_step == 0) result.first_failed_step = step;
        }
    }
    return result;
}

double terminal_error(const IVProblem& problem, const State& y_final)
{
    if (!problem.exact)
        throw std::invalid_argument("terminal_error: problem has no exact solution");
    const State ref = problem.exact(problem.tf);
    double err = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i)
        err = std::max(err, std::fabs(y_final[i] - ref[i]));
    return err;
}

OrderEstimate estimate_order(const ButcherTableau& tableau, const IVProblem& problem,
                             const std::vector<int>& step_counts,
                             const SolverConfig& config)
{
    if (step_counts.size() < 3)
        throw std::invalid_argument("estimate_order: need at least 3 step counts");
    if (!problem.exact)
        throw std::invalid_argument("estimate_order: problem has no exact solution");

    OrderEstimate est;
    est.steps = step_counts;
    const double floor = 100.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + max_norm(problem.exact(problem.tf)));
    for (int n : step_counts) {
        const IntegrationResult run = integrate(problem, tableau, n, config);
        const double err = terminal_error(problem, run.y_final);
        if (err <= floor)
            throw std::domain_error("estimate_order: error at rounding floor for n=" +
                                    std::to_string(n));
        est.errors.push_back(err);
    }

    // Least-squares slope of log(err) vs log(h).
    const int n = static_cast<int>(step_counts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log((problem.tf - problem.t0) / step_counts[i]);
        const double y = std::log(est.errors[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return est;
}

} // namespace colloc
