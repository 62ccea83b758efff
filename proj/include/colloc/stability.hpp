#ifndef COLLOC_STABILITY_HPP
#define COLLOC_STABILITY_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "colloc/bigfloat.hpp"
#include "colloc/tableau.hpp"

namespace colloc {

struct StabilityValue {
    std::complex<double> r{};
    bool pole = false; // I - zA numerically singular
};

/// r(z) = 1 + z b^T (I - zA)^{-1} 1 by complex LU solve.
StabilityValue stability_function_value(const ButcherTableau& tableau,
                                        std::complex<double> z);

/// Numerator/denominator of the Clenshaw-Curtis stability function,
/// r(z) = N(z)/D(z), coefficients ascending at extended precision and
/// normalized so num[0] = den[0] = 1. den[j] = (-1)^j num[j].
struct StabilityRational {
    int s = 0;
    int precision_bits = 0;
    std::vector<BigFloat> num;
    std::vector<BigFloat> den;

    std::complex<double> eval(std::complex<double> z) const;
};

StabilityRational cc_stability_polys(int s, int precision_bits);

/// Denominator roots rounded to double (certified at the rational's
/// precision).
std::vector<std::complex<double>> den_roots(const StabilityRational& rational);

struct StabilityReport {
    int s = 0;
    double min_re = 0.0;
    bool a_stable = false;
    int precision_bits = 0;
};

class CertificationError : public std::runtime_error {
public:
    CertificationError(int s_, const std::string& what_);
    int s;
};

/// Minimum real part over the roots of D_s, certified by residual bounds and
/// by agreement (1e-6 relative) with an independent recomputation at twice
/// the precision. Throws CertificationError when the two disagree.
StabilityReport min_real_part_of_den_roots(int s, int precision_bits);

/// Per-s reports for s = s_min..s_max.
std::vector<StabilityReport> a_stability_scan(int s_min, int s_max, int precision_bits);

/// |r(x)| on the negative real axis. Throws std::domain_error on a pole
/// (which would falsify A0-stability) or a non-negative sample point.
std::vector<double> a0_sample(const ButcherTableau& tableau, const std::vector<double>& xs);
std::vector<double> a0_sample(const StabilityRational& rational, const std::vector<double>& xs);

/// |r| sampled over a rectangle; NaN at poles. Row-major over im (outer,
/// ascending) then re (inner, ascending); resolution = points per axis.
struct RegionGrid {
    std::vector<double> re;    // size nx
    std::vector<double> im;    // size ny
    std::vector<double> abs_r; // size nx*ny, row-major [iy][ix]
    int nx = 0, ny = 0;
};

RegionGrid stability_region_grid(const ButcherTableau& tableau,
                                 double re_min, double re_max,
                                 double im_min, double im_max, int resolution);

} // namespace colloc

#endif
