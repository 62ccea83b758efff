#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colloc/csv.hpp"
#include "colloc/expr.hpp"
#include "colloc/registry.hpp"
#include "colloc/solver.hpp"
#include "colloc/stability.hpp"
#include "colloc/sweep.hpp"
#include "colloc/tableau.hpp"

namespace {

using namespace colloc;

int default_precision_bits(int flag_value)
{
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("COLLOC_PRECISION_BITS")) {
        const int bits = std::atoi(env);
        if (bits > 0) return bits;
    }
    return 256;
}

Family parse_family(const std::string& text)
{
    const auto f = family_from_string(text);
    if (!f || *f == Family::Custom)
        throw std::invalid_argument("--family: expected one of cc, gl, nc");
    return *f;
}

std::vector<Family> parse_families(const std::string& text)
{
    std::vector<Family> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_family(item));
    if (out.empty()) throw std::invalid_argument("--families: empty family list");
    return out;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

void print_tableau(const ButcherTableau& t)
{
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "% .16g", v);
        return std::string(buf);
    };
    std::cout << family_name(t.family) << " tableau, s = " << t.s << "\n";
    for (int i = 0; i < t.s; ++i) {
        std::cout << num(t.c[i]) << " |";
        for (int j = 0; j < t.s; ++j) std::cout << ' ' << num(t.a(i, j));
        std::cout << "\n";
    }
    std::cout << std::string(20, '-') << "+\n" << std::string(20, ' ') << " |";
    for (int j = 0; j < t.s; ++j) std::cout << ' ' << num(t.b[j]);
    std::cout << "\n";
}

SolverConfig make_config(const std::string& strategy, double tol, int max_iter)
{
    SolverConfig config;
    config.tol = tol;
    config.max_iter = max_iter;
    if (strategy == "fixed-point") config.strategy = IterationStrategy::FixedPoint;
    else if (strategy == "newton") config.strategy = IterationStrategy::SimplifiedNewton;
    else throw std::invalid_argument("--strategy: expected fixed-point or newton");
    return config;
}

int run(int argc, char** argv)
{
    CLI::App app{"Collocation Runge-Kutta toolkit: tableau generation, IVP "
                 "integration, stability certification and accuracy sweeps"};
    app.require_subcommand(1);

    // --- tableau ---
    auto* cmd_tableau = app.add_subcommand("tableau", "print or export a Butcher tableau");
    std::string tab_family = "cc";
    int tab_s = 3;
    bool tab_json = false;
    std::string tab_out;
    cmd_tableau->add_option("--family", tab_family, "cc, gl or nc")->required();
    cmd_tableau->add_option("--s", tab_s, "node count")->required();
    cmd_tableau->add_flag("--json", tab_json, "emit JSON instead of a table");
    cmd_tableau->add_option("--out", tab_out, "write to file instead of stdout");

    // --- solve ---
    auto* cmd_solve = app.add_subcommand("solve", "integrate an initial value problem");
    std::string sol_problem, sol_rhs, sol_family = "cc", sol_strategy = "fixed-point";
    double sol_t0 = 0.0, sol_y0 = 1.0, sol_tf = 1.0, sol_tol = 1e-14;
    int sol_s = 3, sol_steps = 1, sol_max_iter = 100;
    auto* opt_problem = cmd_solve->add_option("--problem", sol_problem, "built-in problem name");
    auto* opt_rhs = cmd_solve->add_option("--rhs", sol_rhs, "scalar right-hand side f(t,y)");
    opt_problem->excludes(opt_rhs);
    opt_rhs->excludes(opt_problem);
    cmd_solve->add_option("--t0", sol_t0, "initial time (with --rhs)");
    cmd_solve->add_option("--y0", sol_y0, "initial value (with --rhs)");
    cmd_solve->add_option("--tf", sol_tf, "final time (with --rhs)");
    cmd_solve->add_option("--family", sol_family, "cc, gl or nc");
    cmd_solve->add_option("--s", sol_s, "node count");
    cmd_solve->add_option("--steps", sol_steps, "number of fixed steps");
    cmd_solve->add_option("--strategy", sol_strategy, "fixed-point or newton");
    cmd_solve->add_option("--tol", sol_tol, "stage residual tolerance");
    cmd_solve->add_option("--max-iter", sol_max_iter, "stage iteration cap");

    // --- sweep ---
    auto* cmd_sweep = app.add_subcommand("sweep", "accuracy / stability sweeps");
    cmd_sweep->require_subcommand(1);

    auto* cmd_acc = cmd_sweep->add_subcommand("accuracy", "terminal error vs node count");
    std::string acc_problem = "example1", acc_families = "cc,gl,nc", acc_out;
    int acc_smin = 2, acc_smax = 40, acc_steps = 1, acc_max_iter = 100;
    std::string acc_strategy = "fixed-point";
    double acc_tol = 1e-14;
    cmd_acc->add_option("--problem", acc_problem, "built-in problem name")->required();
    cmd_acc->add_option("--families", acc_families, "comma list of cc,gl,nc");
    cmd_acc->add_option("--s-min", acc_smin, "smallest node count");
    cmd_acc->add_option("--s-max", acc_smax, "largest node count");
    cmd_acc->add_option("--steps", acc_steps, "number of fixed steps");
    cmd_acc->add_option("--strategy", acc_strategy, "fixed-point or newton");
    cmd_acc->add_option("--tol", acc_tol, "stage residual tolerance");
    cmd_acc->add_option("--max-iter", acc_max_iter, "stage iteration cap");
    cmd_acc->add_option("--out", acc_out, "output CSV path");

    auto* cmd_stab = cmd_sweep->add_subcommand("stability", "certified min Re of D_s roots");
    int stab_smin = 2, stab_smax = 78, stab_bits = 0;
    std::string stab_out;
    cmd_stab->add_option("--s-min", stab_smin, "smallest node count");
    cmd_stab->add_option("--s-max", stab_smax, "largest node count");
    cmd_stab->add_option("--bits", stab_bits, "mantissa bits (default env COLLOC_PRECISION_BITS or 256)");
    cmd_stab->add_option("--out", stab_out, "output CSV path");

    // --- region ---
    auto* cmd_region = app.add_subcommand("region", "sample |r(z)| over a rectangle");
    std::string reg_family = "cc", reg_out;
    int reg_s = 3, reg_resolution = 101;
    double reg_remin = -6, reg_remax = 2, reg_immin = -4, reg_immax = 4;
    cmd_region->add_option("--family", reg_family, "cc, gl or nc");
    cmd_region->add_option("--s", reg_s, "node count");
    cmd_region->add_option("--re-min", reg_remin);
    cmd_region->add_option("--re-max", reg_remax);
    cmd_region->add_option("--im-min", reg_immin);
    cmd_region->add_option("--im-max", reg_immax);
    cmd_region->add_option("--resolution", reg_resolution, "points per axis");
    cmd_region->add_option("--out", reg_out, "output CSV path");

    // --- order ---
    auto* cmd_order = app.add_subcommand("order", "accuracy order by vanishing moments");
    std::string ord_family = "cc";
    int ord_s = 3;
    cmd_order->add_option("--family", ord_family, "cc, gl or nc")->required();
    cmd_order->add_option("--s", ord_s, "node count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or diagnostic
        return code == 0 ? 0 : 1;    // any user error maps to 1
    }

    if (cmd_tableau->parsed()) {
        const ButcherTableau t = family_tableau(parse_family(tab_family), tab_s);
        if (tab_json)
            emit(tab_out, tableau_to_json(t) + "\n");
        else if (tab_out.empty())
            print_tableau(t);
        else
            write_file(tab_out, tableau_to_json(t) + "\n");
        return 0;
    }

    if (cmd_solve->parsed()) {
        std::optional<IVProblem> problem;
        if (!sol_problem.empty()) {
            problem = problem_by_name(sol_problem);
        } else if (!sol_rhs.empty()) {
            const expr::NodePtr ast = expr::parse(sol_rhs);
            problem = problem_from_expr(*ast, sol_t0, sol_y0, sol_tf);
        } else {
            std::cerr << "solve: need --problem or --rhs\n";
            return 1;
        }
        const ButcherTableau t = family_tableau(parse_family(sol_family), sol_s);
        const SolverConfig config = make_config(sol_strategy, sol_tol, sol_max_iter);
        const IntegrationResult run = integrate(*problem, t, sol_steps, config);
        std::cout << "t = " << csv::format_number(problem->tf) << "\ny =";
        for (double v : run.y_final) std::cout << ' ' << csv::format_number(v);
        std::cout << "\niterations = " << run.total_iterations() << "\n";
        if (problem->exact)
            std::cout << "error = " << csv::format_number(terminal_error(*problem, run.y_final))
                      << "\n";
        return 0;
    }

    if (cmd_acc->parsed()) {
        SweepOptions options;
        options.n_steps = acc_steps;
        options.config = make_config(acc_strategy, acc_tol, acc_max_iter);
        const auto rows = accuracy_sweep(problem_by_name(acc_problem),
                                         parse_families(acc_families),
                                         acc_smin, acc_smax, options);
        emit(acc_out, accuracy_csv(rows));
        return 0;
    }

    if (cmd_stab->parsed()) {
        const int bits = default_precision_bits(stab_bits);
        const auto reports = a_stability_scan(stab_smin, stab_smax, bits);
        emit(stab_out, stability_csv(reports));
        return 0;
    }

    if (cmd_region->parsed()) {
        const ButcherTableau t = family_tableau(parse_family(reg_family), reg_s);
        const RegionGrid grid = stability_region_grid(t, reg_remin, reg_remax,
                                                      reg_immin, reg_immax, reg_resolution);
        emit(reg_out, region_csv(grid));
        return 0;
    }

    if (cmd_order->parsed()) {
        const OrderReport report = order_of(family_kernel(parse_family(ord_family), ord_s));
        std::cout << family_name(parse_family(ord_family)) << " s = " << report.s
                  << ": order " << report.order << " (m = " << report.m << ")\n";
        std::cout << "moments:";
        for (double v : report.moments) std::cout << ' ' << csv::format_number(v);
        std::cout << "\n";
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const colloc::NonConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const colloc::CertificationError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const colloc::expr::ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
