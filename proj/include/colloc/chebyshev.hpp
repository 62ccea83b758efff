#ifndef COLLOC_CHEBYSHEV_HPP
#define COLLOC_CHEBYSHEV_HPP

#include <vector>

#include "colloc/bigfloat.hpp"

namespace colloc::cheb {

/// Chebyshev extrema grid on [-1, 1], endpoints included.
/// xi[0] = -1 and xi[s-1] = +1 exactly; xi[i] + xi[s-1-i] = 0 exactly.
struct NodeSet {
    int s = 0;
    std::vector<double> xi;
};

/// Truncated first-kind Chebyshev series. Coefficients follow the
/// double-prime summation convention: when the series is summed, the first
/// and last stored coefficients are halved. A length-1 series consists of a
/// single (halved) T_0 term.
struct ChebyshevSeries {
    std::vector<double> coeffs;

    /// Series value via the convention above.
    double value(double x) const;

    /// Plain coefficients (convention folded in: ends halved).
    std::vector<double> plain() const;

    /// Wrap plain coefficients back into convention storage (ends doubled).
    static ChebyshevSeries from_plain(const std::vector<double>& plain);
};

/// T_k(x) by the three-term recurrence; valid for any real x.
double eval_T(int k, double x);

/// U_k(x) by the three-term recurrence.
double eval_U(int k, double x);

/// Recurrence evaluation at extended precision (shared with tableau/stability
/// construction paths).
BigFloat eval_T(int k, const BigFloat& x);

/// The s extrema of T_{s-1} on [-1,1], ascending. Requires s >= 2.
NodeSet chebyshev_points(int s);

/// j-th derivative of T_s at +1 or -1:
///   T_s^(j)(±1) = (±1)^(s+j) · prod_{k=0}^{j-1} (s² - k²)/(2k+1).
/// Overflows double for large s, j; use the BigFloat variant then.
double boundary_derivative(int s, int j, int sign);
BigFloat boundary_derivative_big(int s, int j, int sign);

/// Interpolant coefficients from samples taken at chebyshev_points(values.size()):
///   beta_k = 2/(s-1) · Σ''_j values[j]·T_k(xi_j),  k = 0..s-1.
ChebyshevSeries interp_coeffs(const std::vector<double>& values);

/// Antiderivative series, integration constant fixed so the result
/// vanishes at xi = -1.
ChebyshevSeries integrate_series(const ChebyshevSeries& series);

} // namespace colloc::cheb

#endif
