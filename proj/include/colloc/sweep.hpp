#ifndef COLLOC_SWEEP_HPP
#define COLLOC_SWEEP_HPP

#include <string>
#include <vector>

#include "colloc/solver.hpp"
#include "colloc/stability.hpp"
#include "colloc/tableau.hpp"

namespace colloc {

struct SweepRow {
    Family family = Family::Custom;
    int s = 0;
    double error = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct SweepOptions {
    int n_steps = 1; // single step: h = tf - t0
    SolverConfig config;
};

/// Accuracy sweep over node counts. A cell that exhausts its iteration cap is
/// recorded, not fatal: the step is pushed through with its last iterate and
/// flagged converged=false (error +inf when that iterate is non-finite).
/// Clenshaw-Curtis and Newton-Cotes cells start at s >= 2; Gauss-Legendre
/// at s >= 1.
std::vector<SweepRow> accuracy_sweep(const IVProblem& problem,
                                     const std::vector<Family>& families,
                                     int s_min, int s_max,
                                     const SweepOptions& options = {});

/// CSV with header family,s,error,iterations,converged.
std::string accuracy_csv(const std::vector<SweepRow>& rows);

/// CSV with header s,min_re,a_stable,precision_bits.
std::string stability_csv(const std::vector<StabilityReport>& reports);

/// CSV with header re,im,abs_r.
std::string region_csv(const RegionGrid& grid);

} // namespace colloc

#endif
