#include "colloc/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "colloc/csv.hpp"

namespace colloc {

std::vector<SweepRow> accuracy_sweep(const IVProblem& problem,
                                     const std::vector<Family>& families,
                                     int s_min, int s_max,
                                     const SweepOptions& options)
{
    if (s_min < 1 || s_max < s_min || s_max > 60)
        throw std::invalid_argument("accuracy_sweep: need 1 <= s_min <= s_max <= 60");

    std::vector<SweepRow> rows;
    for (Family family : families) {
        const int lo = family == Family::GaussLegendre ? s_min : std::max(s_min, 2);
        for (int s = lo; s <= s_max; ++s) {
            const ButcherTableau tableau = family_tableau(family, s);
            const IntegrationResult run = integrate(problem, tableau, options.n_steps,
                                                    options.config, FailurePolicy::Record);
            SweepRow row;
            row.family = family;
            row.s = s;
            row.iterations = run.total_iterations();
            row.converged = run.converged;
            if (problem.exact) {
                bool finite = true;
                for (double v : run.y_final)
                    if (!std::isfinite(v)) finite = false;
                row.error = finite ? terminal_error(problem, run.y_final)
                                   : std::numeric_limits<double>::infinity();
            } else {
                row.error = std::numeric_limits<double>::quiet_NaN();
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string accuracy_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream out;
    out << "family,s,error,iterations,converged\n";
    for (const SweepRow& row : rows)
        out << family_key(row.family) << ',' << row.s << ','
            << csv::format_number(row.error) << ',' << row.iterations << ','
            << (row.converged ? "true" : "false") << '\n';
    return out.str();
}

std::string stability_csv(const std::vector<StabilityReport>& reports)
{
    std::ostringstream out;
    out << "s,min_re,a_stable,precision_bits\n";
    for (const StabilityReport& rep : reports)
        out << rep.s << ',' << csv::format_number(rep.min_re) << ','
            << (rep.a_stable ? "true" : "false") << ',' << rep.precision_bits << '\n';
    return out.str();
}

std::string region_csv(const RegionGrid& grid)
{
    std::ostringstream out;
    out << "re,im,abs_r\n";
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix)
            out << csv::format_number(grid.re[ix]) << ','
                << csv::format_number(grid.im[iy]) << ','
                << csv::format_number(grid.abs_r[static_cast<std::size_t>(iy) * grid.nx + ix])
                << '\n';
    return out.str();
}

} // namespace colloc
