// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Tolerances are fixed here, not configurable.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "colloc/registry.hpp"
#include "colloc/solver.hpp"
#include "colloc/stability.hpp"
#include "colloc/sweep.hpp"
#include "colloc/tableau.hpp"

using namespace colloc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double now_seconds()
{
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(const char* format, ...)
{
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// --- criterion 1: closed-form CC tableau vs Lagrange-integral oracle ---
Outcome criterion1()
{
    const double t_start = now_seconds();
    double worst = 0.0;
    for (int s = 2; s <= 12; ++s) {
        const ButcherTableau closed = cc_tableau(s);
        const ButcherTableau oracle =
            collocation_tableau(clenshaw_curtis_nodes(s), Family::ClenshawCurtis);
        for (int i = 0; i < s; ++i) {
            worst = std::max(worst, std::fabs(closed.c[i] - oracle.c[i]));
            worst = std::max(worst, std::fabs(closed.b[i] - oracle.b[i]));
            for (int j = 0; j < s; ++j)
                worst = std::max(worst, std::fabs(closed.a(i, j) - oracle.a(i, j)));
        }
    }
    const double elapsed = now_seconds() - t_start;
    return {worst <= 1e-12 && elapsed < 1.0,
            fmt("max entrywise deviation %.3e (<= 1e-12), runtime %.2fs (< 1s)",
                worst, elapsed)};
}

// --- criterion 2: tableau invariants, all families, s <= 20 ---
Outcome criterion2()
{
    double worst = 0.0;
    bool last_row_exact = true;
    for (int s = 2; s <= 20; ++s)
        for (Family family :
             {Family::ClenshawCurtis, Family::GaussLegendre, Family::NewtonCotes}) {
            const ButcherTableau t = family_tableau(family, s);
            double sum_b = 0.0;
            for (double v : t.b) sum_b += v;
            worst = std::max(worst, std::fabs(sum_b - 1.0));
            for (int i = 0; i < s; ++i) {
                double row = 0.0;
                for (int j = 0; j < s; ++j) row += t.a(i, j);
                worst = std::max(worst, std::fabs(row - t.c[i]));
                worst = std::max(worst, std::fabs(t.c[i] + t.c[s - 1 - i] - 1.0));
                worst = std::max(worst, std::fabs(t.b[i] - t.b[s - 1 - i]));
            }
            if (family != Family::GaussLegendre)
                for (int j = 0; j < s; ++j)
                    if (t.b[j] != t.a(s - 1, j)) last_row_exact = false;
        }
    return {worst <= 1e-13 && last_row_exact,
            fmt("max invariant residual %.3e (<= 1e-13), b == last row: %s",
                worst, last_row_exact ? "exact" : "VIOLATED")};
}

// --- criterion 3: rational vs linear-solve stability values ---
Outcome criterion3()
{
    std::mt19937 gen(20240817);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int s = 2; s <= 10; ++s) {
        const ButcherTableau tableau = cc_tableau(s);
        const StabilityRational rat = cc_stability_polys(s, 256);
        for (int k = 0; k < 100; ++k) {
            const double radius = 5.0 * std::sqrt(unit(gen));
            const double theta = angle(gen);
            const std::complex<double> z(radius * std::cos(theta),
                                         radius * std::sin(theta));
            const StabilityValue lin = stability_function_value(tableau, z);
            if (lin.pole) continue;
            const double dev = std::abs(lin.r - rat.eval(z)) / (1.0 + std::abs(lin.r));
            worst = std::max(worst, dev);
        }
    }
    return {worst <= 1e-9, fmt("max scaled deviation %.3e (<= 1e-9)", worst)};
}

// --- criterion 4: |r(iy)| = 1 on the imaginary axis for CC ---
Outcome criterion4()
{
    double worst = 0.0;
    for (int s = 2; s <= 10; ++s) {
        const ButcherTableau tableau = cc_tableau(s);
        for (int i = 0; i <= 2000; ++i) {
            const double y = -100.0 + 0.1 * i;
            const StabilityValue v = stability_function_value(tableau, {0.0, y});
            if (v.pole) return {false, fmt("unexpected pole at iy, y=%g, s=%d", y, s)};
            worst = std::max(worst, std::fabs(std::abs(v.r) - 1.0));
        }
    }
    return {worst <= 1e-10, fmt("max | |r(iy)| - 1 | = %.3e (<= 1e-10)", worst)};
}

// --- criterion 5: A0-stability samples on the negative real axis ---
Outcome criterion5()
{
    double worst = 0.0;
    for (int s = 2; s <= 20; ++s) {
        std::vector<double> xs;
        for (int e = 0; e <= 6; ++e) xs.push_back(-std::pow(10.0, e));
        for (double v : a0_sample(cc_tableau(s), xs)) worst = std::max(worst, v);
    }
    return {worst < 1.0, fmt("max |r(x)| on the log grid = %.15g (< 1)", worst)};
}

// --- criterion 6: certified A-stability for s = 2..78 ---
Outcome criterion6()
{
    try {
        const std::vector<StabilityReport> reports = a_stability_scan(2, 78, 256);
        double least = reports.front().min_re;
        int bad = 0;
        for (const auto& rep : reports) {
            least = std::min(least, rep.min_re);
            if (!rep.a_stable) ++bad;
        }
        return {bad == 0,
                fmt("all 77 scans certified, min over s of min_re = %.6g (> 0)", least)};
    } catch (const CertificationError& e) {
        return {false, fmt("certification failed: %s", e.what())};
    }
}

// --- criterion 7: accuracy orders by vanishing moments ---
Outcome criterion7()
{
    for (int s = 1; s <= 5; ++s) {
        const int order = order_of(family_kernel(Family::GaussLegendre, s)).order;
        if (order != 2 * s)
            return {false, fmt("GL s=%d gave order %d, expected %d", s, order, 2 * s)};
    }
    for (int s : {3, 5, 7, 9}) {
        const int order = order_of(family_kernel(Family::ClenshawCurtis, s)).order;
        if (order != s + 1)
            return {false, fmt("CC s=%d gave order %d, expected %d", s, order, s + 1)};
    }
    for (int s : {2, 4, 6, 8}) {
        const int order = order_of(family_kernel(Family::ClenshawCurtis, s)).order;
        if (order != s)
            return {false, fmt("CC s=%d gave order %d, expected %d", s, order, s)};
    }
    return {true, "GL order 2s (s=1..5); CC order s+1 (odd), s (even)"};
}

// --- criterion 8: empirical convergence slopes ---
Outcome criterion8()
{
    const double t_start = now_seconds();
    const IVProblem& p = problem_by_name("example1");
    const std::vector<int> steps{4, 8, 16, 32, 64};
    const double cc3 = estimate_order(cc_tableau(3), p, steps).slope;
    const double mid = estimate_order(collocation_tableau({0.5}), p, steps).slope;
    const double elapsed = now_seconds() - t_start;
    const bool pass = std::fabs(cc3 - 4.0) <= 0.2 && std::fabs(mid - 2.0) <= 0.2 &&
                      elapsed < 1.0;
    return {pass, fmt("cc s=3 slope %.3f (4 +- 0.2), midpoint slope %.3f (2 +- 0.2), "
                      "runtime %.2fs (< 1s)", cc3, mid, elapsed)};
}

struct SweepData {
    std::vector<double> cc_err, nc_err;
};

SweepData example2_sweep()
{
    const IVProblem& p = problem_by_name("example2");
    const auto rows =
        accuracy_sweep(p, {Family::ClenshawCurtis, Family::NewtonCotes}, 2, 40);
    SweepData data;
    data.cc_err.assign(41, 0.0);
    data.nc_err.assign(41, 0.0);
    for (const auto& row : rows) {
        if (row.family == Family::ClenshawCurtis) data.cc_err[row.s] = row.error;
        if (row.family == Family::NewtonCotes) data.nc_err[row.s] = row.error;
    }
    return data;
}

// --- criterion 9: example 2 error magnitudes at s = 30 ---
Outcome criterion9(const SweepData& data)
{
    const double cc30 = data.cc_err[30];
    const double nc30 = data.nc_err[30];
    const double ratio = cc30 / nc30;
    const bool pass = cc30 <= 1e-13 && nc30 >= 1e-11 && ratio <= 1e-3;
    return {pass, fmt("cc s=30 error %.3e (<= 1e-13), nc s=30 error %.3e (>= 1e-11), "
                      "ratio %.3e (<= 1e-3)", cc30, nc30, ratio)};
}

// --- criterion 10: equispaced-node divergence shape ---
Outcome criterion10(const SweepData& data)
{
    double nc_min = data.nc_err[2];
    for (int s = 2; s <= 40; ++s) nc_min = std::min(nc_min, data.nc_err[s]);
    const double nc40 = data.nc_err[40];
    const bool pass = nc40 >= 10.0 * nc_min;
    return {pass, fmt("nc s=40 error %.3e vs minimum %.3e, factor %.3g (>= 10)",
                      nc40, nc_min, nc40 / nc_min)};
}

// --- criterion 11: example 1 slope ratio ---
// Both decay rates vary with the node count, so they are compared over the
// COMMON pre-floor node range: the s for which both families still have
// errors above 1e-13. Fitting each family over its own full range instead
// would compare the rates at different node counts (the slower family's
// range reaches further, where its own rate has already steepened); that
// alternative figure is reported alongside for transparency.
Outcome criterion11()
{
    const IVProblem& p = problem_by_name("example1");
    const auto errors = [&](Family family) {
        std::vector<double> err(21, 0.0);
        for (const auto& row : accuracy_sweep(p, {family}, 1, 20))
            if (row.converged) err[row.s] = row.error;
        return err;
    };
    const std::vector<double> cc = errors(Family::ClenshawCurtis);
    const std::vector<double> gl = errors(Family::GaussLegendre);

    const auto pre_floor = [](const std::vector<double>& err, int s) {
        return err[s] > 1e-13;
    };
    const auto fit = [&](const std::vector<double>& err, int lo, int hi) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (int s = lo; s <= hi; ++s) {
            if (!pre_floor(err, s)) continue;
            sx += s; sy += std::log10(err[s]);
            sxx += static_cast<double>(s) * s;
            sxy += s * std::log10(err[s]);
            ++n;
        }
        if (n < 3) return 0.0;
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };

    int common_hi = 2;
    for (int s = 2; s <= 20 && pre_floor(cc, s) && pre_floor(gl, s); ++s) common_hi = s;
    const double slope_cc = fit(cc, 2, common_hi);
    const double slope_gl = fit(gl, 2, common_hi);
    const double ratio = slope_cc / slope_gl;

    // per-family-window figure, for the record
    const double own_ratio = fit(cc, 2, 20) / fit(gl, 1, 20);

    const bool pass = common_hi >= 4 && ratio >= 0.35 && ratio <= 0.65;
    return {pass, fmt("common pre-floor range s = 2..%d: cc slope %.3f, gl slope %.3f "
                      "per node, ratio %.3f (required within [0.35, 0.65]); "
                      "per-family-window ratio %.3f",
                      common_hi, slope_cc, slope_gl, ratio, own_ratio)};
}

} // namespace

int main()
{
    int failures = 0;
    const auto report = [&](int id, const char* title, const Outcome& outcome) {
        std::printf("criterion %2d [%s]: %s — %s\n", id,
                    outcome.pass ? "PASS" : "FAIL", title, outcome.detail.c_str());
        if (!outcome.pass) ++failures;
        std::fflush(stdout);
    };

    report(1, "closed-form vs oracle tableau equivalence", criterion1());
    report(2, "tableau invariant suite (three families, s <= 20)", criterion2());
    report(3, "stability rational vs linear solve at seeded points", criterion3());
    report(4, "imaginary-axis modulus of r for CC", criterion4());
    report(5, "A0-stability on the negative real axis", criterion5());
    report(6, "certified A-stability scan s = 2..78", criterion6());
    report(7, "vanishing-moment accuracy orders", criterion7());
    report(8, "empirical convergence slopes", criterion8());
    const SweepData data = example2_sweep();
    report(9, "single-step errors at s = 30 (problem example2)", criterion9(data));
    report(10, "equispaced-node divergence shape (problem example2)", criterion10(data));
    report(11, "log-error slope ratio CC/GL (problem example1)", criterion11());

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures;
}
