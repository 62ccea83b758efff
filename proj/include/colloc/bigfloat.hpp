#ifndef COLLOC_BIGFLOAT_HPP
#define COLLOC_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

namespace colloc {

/// Arbitrary-precision real, precision selected at runtime.
using BigFloat = boost::multiprecision::mpfr_float;

/// Decimal digits needed to hold `bits` binary mantissa digits (with margin).
inline int digits10_for_bits(int bits)
{
    return static_cast<int>(bits * 0.3010299956639812) + 4;
}

/// Scoped override of the default working precision, in mantissa bits.
/// All BigFloat values constructed while the guard is alive carry at least
/// the requested precision.
///
/// The underlying default-precision setting is process-global, so the guard
/// holds a (recursive) lock for its lifetime: concurrent extended-precision
/// operations serialize against each other instead of computing at the wrong
/// precision. Double-precision entry points are unaffected.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    int saved_;
};

/// Pi at the current working precision.
BigFloat big_pi();

/// Releases the mpfr per-thread constant caches. Call at the end of any
/// short-lived thread that ran extended-precision operations; the main
/// thread is cleaned up automatically at exit.
void release_thread_caches();

/// Minimal complex type over BigFloat. Only what the root finder and the
/// rational stability evaluation need.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(double r) : re(r), im(0) {}

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b)
{
    return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b)
{
    return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigFloat& a, const BigComplex& b)
{
    return {a * b.re, a * b.im};
}

/// Smith's algorithm; avoids overflow for extreme component ratios.
inline BigComplex operator/(const BigComplex& a, const BigComplex& b)
{
    using boost::multiprecision::abs;
    if (abs(b.re) >= abs(b.im)) {
        BigFloat q = b.im / b.re;
        BigFloat d = b.re + b.im * q;
        return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
    }
    BigFloat q = b.re / b.im;
    BigFloat d = b.re * q + b.im;
    return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
}

inline BigFloat abs(const BigComplex& a)
{
    return boost::multiprecision::hypot(a.re, a.im);
}

} // namespace colloc

#endif
