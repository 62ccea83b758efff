#include "colloc/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace colloc::cheb {

namespace {

template <class Real>
Real recurrence_T(int k, const Real& x)
{
    if (k < 0) throw std::domain_error("eval_T: negative degree");
    if (k == 0) return Real(1);
    Real tkm1(1), tk(x);
    for (int i = 1; i < k; ++i) {
        Real tkp1 = 2 * x * tk - tkm1;
        tkm1 = tk;
        tk = tkp1;
    }
    return tk;
}

} // namespace

double eval_T(int k, double x)
{
    return recurrence_T(k, x);
}

BigFloat eval_T(int k, const BigFloat& x)
{
    return recurrence_T(k, x);
}

double eval_U(int k, double x)
{
    if (k < 0) throw std::domain_error("eval_U: negative degree");
    if (k == 0) return 1.0;
    double ukm1 = 1.0, uk = 2.0 * x;
    for (int i = 1; i < k; ++i) {
        double ukp1 = 2.0 * x * uk - ukm1;
        ukm1 = uk;
        uk = ukp1;
    }
    return uk;
}

NodeSet chebyshev_points(int s)
{
    if (s < 2) throw std::domain_error("chebyshev_points: s must be >= 2");
    NodeSet set;
    set.s = s;
    set.xi.resize(s);
    const double pi = 3.14159265358979323846;
    // Fill the lower half and mirror so the symmetry xi[i] = -xi[s-1-i]
    // holds exactly in floating point.
    for (int i = 0; i < s / 2; ++i) {
        double v = -std::cos(i * pi / (s - 1));
        set.xi[i] = v;
        set.xi[s - 1 - i] = -v;
    }
    if (s % 2 == 1) set.xi[s / 2] = 0.0;
    set.xi[0] = -1.0;
    set.xi[s - 1] = 1.0;
    return set;
}

namespace {

template <class Real>
Real boundary_derivative_impl(int s, int j, int sign)
{
    if (s < 0 || j < 0)
        throw std::domain_error("boundary_derivative: negative degree or order");
    Real prod(1);
    for (int k = 0; k < j; ++k)
        prod *= Real(static_cast<double>(s) * s - static_cast<double>(k) * k) / (2 * k + 1);
    // (±1)^(s+j)
    if (sign < 0 && (s + j) % 2 != 0) prod = -prod;
    return prod;
}

} // namespace

double boundary_derivative(int s, int j, int sign)
{
    return boundary_derivative_impl<double>(s, j, sign);
}

BigFloat boundary_derivative_big(int s, int j, int sign)
{
    return boundary_derivative_impl<BigFloat>(s, j, sign);
}

double ChebyshevSeries::value(double x) const
{
    double acc = 0.0;
    const int n = static_cast<int>(coeffs.size());
    for (int k = 0; k < n; ++k) {
        double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
        acc += w * coeffs[k] * eval_T(k, x);
    }
    return acc;
}

std::vector<double> ChebyshevSeries::plain() const
{
    std::vector<double> p = coeffs;
    if (!p.empty()) {
        p.front() *= 0.5; // single term: halved once
        if (p.size() > 1) p.back() *= 0.5;
    }
    return p;
}

ChebyshevSeries ChebyshevSeries::from_plain(const std::vector<double>& plain)
{
    ChebyshevSeries s;
    s.coeffs = plain;
    if (!s.coeffs.empty()) {
        s.coeffs.front() *= 2.0;
        if (s.coeffs.size() > 1) s.coeffs.back() *= 2.0;
    }
    return s;
}

ChebyshevSeries interp_coeffs(const std::vector<double>& values)
{
    const int s = static_cast<int>(values.size());
    if (s < 2) throw std::invalid_argument("interp_coeffs: need at least 2 samples");
    NodeSet nodes = chebyshev_points(s);
    ChebyshevSeries out;
    out.coeffs.resize(s);
    for (int k = 0; k < s; ++k) {
        double acc = 0.0;
        for (int j = 0; j < s; ++j) {
            double w = (j == 0 || j == s - 1) ? 0.5 : 1.0;
            acc += w * values[j] * eval_T(k, nodes.xi[j]);
        }
        out.coeffs[k] = 2.0 / (s - 1) * acc;
    }
    return out;
}

ChebyshevSeries integrate_series(const ChebyshevSeries& series)
{
    const std::vector<double> a = series.plain();
    const int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("integrate_series: empty series");

    auto coef = [&](int k) { return k < n ? a[k] : 0.0; };

    // Antiderivative coefficients: A_1 = a_0 - a_2/2, A_m = (a_{m-1} - a_{m+1})/(2m).
    std::vector<double> A(n + 1, 0.0);
    A[1] = coef(0) - 0.5 * coef(2);
    for (int m = 2; m <= n; ++m)
        A[m] = (coef(m - 1) - coef(m + 1)) / (2.0 * m);

    // Fix the constant so the antiderivative vanishes at xi = -1.
    double at_minus1 = 0.0;
    for (int m = 1; m <= n; ++m)
        at_minus1 += (m % 2 == 0) ? A[m] : -A[m];
    A[0] = -at_minus1;

    return ChebyshevSeries::from_plain(A);
}

} // namespace colloc::cheb
