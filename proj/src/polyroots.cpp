#include "colloc/polyroots.hpp"

#include <stdexcept>

namespace colloc {

namespace {

// p(z) and p'(z) by a Horner pair.
void horner_pair(const std::vector<BigFloat>& a, const BigComplex& z,
                 BigComplex& p, BigComplex& dp)
{
    const int n = static_cast<int>(a.size()) - 1;
    p = BigComplex(a[n], BigFloat(0));
    dp = BigComplex();
    for (int k = n - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z;
        p.re += a[k];
    }
}

BigFloat coefficient_scale(const std::vector<BigFloat>& a, const BigFloat& absz)
{
    BigFloat scale(0), power(1);
    for (const BigFloat& coef : a) {
        scale += abs(coef) * power;
        power *= absz;
    }
    return scale;
}

} // namespace

std::vector<BigComplex> aberth_roots(const std::vector<BigFloat>& coeffs, int max_iter)
{
    if (coeffs.size() < 2)
        throw std::invalid_argument("aberth_roots: degree must be >= 1");
    if (coeffs.back() == 0)
        throw std::invalid_argument("aberth_roots: leading coefficient is zero");
    const int n = static_cast<int>(coeffs.size()) - 1;

    const BigFloat eps = pow(BigFloat(2),
        -static_cast<int>(BigFloat::default_precision() * 3.32) + 2);
    const BigFloat cert = 16 * n * eps;

    // Start on a circle whose radius matches the geometric-mean root
    // magnitude, with an angular offset to dodge axis symmetry.
    BigFloat radius = pow(abs(coeffs.front()) / abs(coeffs.back()), BigFloat(1) / n);
    if (radius == 0) radius = 1;
    const BigFloat pi = big_pi();
    std::vector<BigComplex> z(n);
    for (int k = 0; k < n; ++k) {
        const BigFloat angle = 2 * pi * k / n + BigFloat(7) / 10;
        z[k] = BigComplex(radius * cos(angle), radius * sin(angle));
    }

    std::vector<bool> settled(n, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_settled = true;
        for (int k = 0; k < n; ++k) {
            if (settled[k]) continue;
            BigComplex p, dp;
            horner_pair(coeffs, z[k], p, dp);
            if (abs(p) <= cert * coefficient_scale(coeffs, abs(z[k]))) {
                settled[k] = true;
                continue;
            }
            all_settled = false;
            const BigComplex newton = p / dp;
            BigComplex repulsion;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                repulsion += BigComplex(BigFloat(1), BigFloat(0)) / (z[k] - z[j]);
            }
            const BigComplex denom = BigComplex(BigFloat(1), BigFloat(0)) -
                                     newton * repulsion;
            z[k] -= newton / denom;
        }
        if (all_settled) return z;
    }
    throw std::runtime_error("aberth_roots: residual certificates not met within cap");
}

} // namespace colloc
