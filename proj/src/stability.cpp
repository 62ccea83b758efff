#include "colloc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "colloc/chebyshev.hpp"
#include "colloc/polyroots.hpp"

namespace colloc {

namespace {

// Complex Gaussian elimination with partial pivoting. Returns false when a
// pivot collapses relative to the matrix scale (pole of r).
bool solve_complex(std::vector<std::complex<double>>& m,
                   std::vector<std::complex<double>>& rhs, int n)
{
    double scale = 0.0;
    for (const auto& v : m) scale = std::max(scale, std::abs(v));
    const double tiny = scale * n * 16 * std::numeric_limits<double>::epsilon();

    auto at = [&](int r, int c) -> std::complex<double>& {
        return m[static_cast<std::size_t>(r) * n + c];
    };
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(at(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > best) { best = std::abs(at(r, col)); pivot = r; }
        if (best <= tiny) return false;
        if (pivot != col) {
            for (int k = col; k < n; ++k) std::swap(at(pivot, k), at(col, k));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            const std::complex<double> factor = at(r, col) / at(col, col);
            at(r, col) = 0.0;
            for (int k = col + 1; k < n; ++k) at(r, k) -= factor * at(col, k);
            rhs[r] -= factor * rhs[col];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) rhs[i] -= at(i, k) * rhs[k];
        rhs[i] /= at(i, i);
    }
    return true;
}

// d_j = M_s^{(s-j)}(1) up to the common positive constant, via the Leibniz
// expansion of ((xi^2-1) T'_{s-1})^{(k)} at xi = 1:
//   d_j ∝ 2^{s-j} (s-j) [ (s-j-1) T_{s-1}^{(s-j-1)}(1) + 2 T_{s-1}^{(s-j)}(1) ].
// Returned normalized by d_0, so d_0 = 1 and r(0) = 1.
std::vector<BigFloat> cc_d_coeffs(int s)
{
    std::vector<BigFloat> d(s);
    for (int j = 0; j < s; ++j) {
        const int k = s - j; // derivative order, 1..s
        const BigFloat term = (k - 1) * cheb::boundary_derivative_big(s - 1, k - 1, +1) +
                              2 * cheb::boundary_derivative_big(s - 1, k, +1);
        d[j] = pow(BigFloat(2), k) * k * term;
    }
    const BigFloat d0 = d[0];
    for (auto& v : d) v /= d0;
    return d;
}

BigComplex eval_poly(const std::vector<BigFloat>& a, const BigComplex& z)
{
    BigComplex p(a.back(), BigFloat(0));
    for (int k = static_cast<int>(a.size()) - 2; k >= 0; --k) {
        p = p * z;
        p.re += a[k];
    }
    return p;
}

double min_re_once(int s, int bits)
{
    PrecisionGuard guard(bits);
    const std::vector<BigFloat> d = cc_d_coeffs(s);
    std::vector<BigFloat> den(d);
    for (int j = 1; j < s; j += 2) den[j] = -den[j];
    const std::vector<BigComplex> roots = aberth_roots(den);
    BigFloat min_re = roots.front().re;
    for (const auto& z : roots)
        if (z.re < min_re) min_re = z.re;
    return min_re.convert_to<double>();
}

} // namespace

StabilityValue stability_function_value(const ButcherTableau& tableau,
                                        std::complex<double> z)
{
    const int s = tableau.s;
    std::vector<std::complex<double>> m(static_cast<std::size_t>(s) * s);
    std::vector<std::complex<double>> rhs(s, 1.0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            m[static_cast<std::size_t>(i) * s + j] =
                (i == j ? 1.0 : 0.0) - z * tableau.a(i, j);

    StabilityValue out;
    if (!solve_complex(m, rhs, s)) {
        out.pole = true;
        out.r = std::complex<double>(std::numeric_limits<double>::infinity(),
                                     std::numeric_limits<double>::infinity());
        return out;
    }
    std::complex<double> acc = 0.0;
    for (int j = 0; j < s; ++j) acc += tableau.b[j] * rhs[j];
    out.r = 1.0 + z * acc;
    return out;
}

StabilityRational cc_stability_polys(int s, int precision_bits)
{
    if (s < 2) throw std::domain_error("cc_stability_polys: s must be >= 2");
    if (precision_bits < 128)
        throw std::domain_error("cc_stability_polys: precision_bits must be >= 128");
    PrecisionGuard guard(precision_bits);
    StabilityRational rat;
    rat.s = s;
    rat.precision_bits = precision_bits;
    rat.num = cc_d_coeffs(s);
    rat.den = rat.num;
    for (int j = 1; j < s; j += 2) rat.den[j] = -rat.den[j];
    return rat;
}

std::complex<double> StabilityRational::eval(std::complex<double> z) const
{
    PrecisionGuard guard(precision_bits);
    const BigComplex zb(BigFloat(z.real()), BigFloat(z.imag()));
    const BigComplex value = eval_poly(num, zb) / eval_poly(den, zb);
    return {value.re.convert_to<double>(), value.im.convert_to<double>()};
}

std::vector<std::complex<double>> den_roots(const StabilityRational& rational)
{
    PrecisionGuard guard(rational.precision_bits);
    const std::vector<BigComplex> roots = aberth_roots(rational.den);
    std::vector<std::complex<double>> out;
    out.reserve(roots.size());
    for (const auto& z : roots)
        out.emplace_back(z.re.convert_to<double>(), z.im.convert_to<double>());
    return out;
}

CertificationError::CertificationError(int s_, const std::string& what_)
    : std::runtime_error(what_), s(s_)
{
}

StabilityReport min_real_part_of_den_roots(int s, int precision_bits)
{
    if (s < 2) throw std::domain_error("min_real_part_of_den_roots: s must be >= 2");
    if (precision_bits < 128)
        throw std::domain_error("min_real_part_of_den_roots: precision_bits must be >= 128");
    const double first = min_re_once(s, precision_bits);
    const double doubled = min_re_once(s, 2 * precision_bits);
    if (std::fabs(first - doubled) > 1e-6 * std::fabs(doubled))
        throw CertificationError(s,
            "min_real_part_of_den_roots: min_re unstable under precision doubling at s=" +
            std::to_string(s) + "; raise precision_bits");
    StabilityReport report;
    report.s = s;
    report.min_re = doubled;
    report.a_stable = report.min_re > 0.0;
    report.precision_bits = precision_bits;
    return report;
}

std::vector<StabilityReport> a_stability_scan(int s_min, int s_max, int precision_bits)
{
    if (s_min < 2 || s_max < s_min)
        throw std::domain_error("a_stability_scan: need 2 <= s_min <= s_max");
    std::vector<StabilityReport> reports;
    reports.reserve(s_max - s_min + 1);
    for (int s = s_min; s <= s_max; ++s)
        reports.push_back(min_real_part_of_den_roots(s, precision_bits));
    return reports;
}

std::vector<double> a0_sample(const ButcherTableau& tableau, const std::vector<double>& xs)
{
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (!(x < 0)) throw std::domain_error("a0_sample: sample points must be negative");
        const StabilityValue v = stability_function_value(tableau, {x, 0.0});
        if (v.pole)
            throw std::domain_error("a0_sample: pole on the negative real axis at x=" +
                                    std::to_string(x));
        out.push_back(std::abs(v.r));
    }
    return out;
}

std::vector<double> a0_sample(const StabilityRational& rational, const std::vector<double>& xs)
{
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (!(x < 0)) throw std::domain_error("a0_sample: sample points must be negative");
        const double value = std::abs(rational.eval({x, 0.0}));
        if (!std::isfinite(value))
            throw std::domain_error("a0_sample: pole on the negative real axis at x=" +
                                    std::to_string(x));
        out.push_back(value);
    }
    return out;
}

RegionGrid stability_region_grid(const ButcherTableau& tableau,
                                 double re_min, double re_max,
                                 double im_min, double im_max, int resolution)
{
    if (resolution < 1)
        throw std::invalid_argument("stability_region_grid: resolution must be >= 1");
    RegionGrid grid;
    grid.nx = resolution;
    grid.ny = resolution;
    grid.re.resize(resolution);
    grid.im.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
        const double frac = resolution == 1 ? 0.0 : static_cast<double>(i) / (resolution - 1);
        grid.re[i] = re_min + frac * (re_max - re_min);
        grid.im[i] = im_min + frac * (im_max - im_min);
    }
    grid.abs_r.resize(static_cast<std::size_t>(resolution) * resolution);
    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 0; ix < resolution; ++ix) {
            const StabilityValue v =
                stability_function_value(tableau, {grid.re[ix], grid.im[iy]});
            grid.abs_r[static_cast<std::size_t>(iy) * resolution + ix] =
                v.pole ? std::numeric_limits<double>::quiet_NaN() : std::abs(v.r);
        }
    return grid;
}

} // namespace colloc
