#include "colloc/registry.hpp"

#include <cmath>
#include <memory>

namespace colloc {

const std::map<std::string, IVProblem>& builtin_problems()
{
    static const std::map<std::string, IVProblem> problems = [] {
        std::map<std::string, IVProblem> m;
        m.emplace("example1", make_problem(
            "example1",
            [](double, const State& y, State& dydt) {
                dydt.resize(1);
                dydt[0] = y[0];
            },
            0.0, State{1.0}, 1.0,
            [](double t) { return State{std::exp(t)}; }));
        // The singular point of this right-hand side is t = 0, so the
        // problem starts at t0 = 1 where the exact solution equals 1.
        m.emplace("example2", make_problem(
            "example2",
            [](double t, const State& y, State& dydt) {
                dydt.resize(1);
                dydt[0] = 2.0 * y[0] / std::pow(t, 3.0);
            },
            1.0, State{1.0}, 3.0,
            [](double t) { return State{std::exp(1.0 - 1.0 / (t * t))}; }));
        return m;
    }();
    return problems;
}

const IVProblem& problem_by_name(const std::string& name)
{
    const auto& problems = builtin_problems();
    const auto it = problems.find(name);
    if (it == problems.end())
        throw std::invalid_argument("unknown problem '" + name + "'");
    return it->second;
}

IVProblem problem_from_expr(const expr::Node& rhs, double t0, double y0, double tf,
                            std::string name)
{
    std::shared_ptr<const expr::Node> ast = expr::clone(rhs);
    return make_problem(
        std::move(name),
        [ast](double t, const State& y, State& dydt) {
            dydt.resize(1);
            dydt[0] = expr::eval(*ast, t, y[0]);
        },
        t0, State{y0}, tf);
}

} // namespace colloc
