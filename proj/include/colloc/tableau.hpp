#ifndef COLLOC_TABLEAU_HPP
#define COLLOC_TABLEAU_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colloc/bigfloat.hpp"

namespace colloc {

enum class Family { ClenshawCurtis, GaussLegendre, NewtonCotes, Custom };

std::string family_name(Family f); // "ClenshawCurtis", ...
std::string family_key(Family f);  // "cc", "gl", "nc", "custom"
std::optional<Family> family_from_string(std::string_view text); // accepts either form

/// Runge-Kutta coefficient set (A, b, c). A is row-major, s x s.
struct ButcherTableau {
    int s = 0;
    std::vector<double> c;
    std::vector<double> b;
    std::vector<double> A;
    Family family = Family::Custom;

    double a(int i, int j) const { return A[static_cast<std::size_t>(i) * s + j]; }
    double& a(int i, int j) { return A[static_cast<std::size_t>(i) * s + j]; }
};

/// Chebyshev extrema mapped to [0,1]: c_i = (1 - cos((i-1)π/(s-1)))/2.
/// Endpoints are exactly 0 and 1; c_i + c_{s-1-i} = 1 exactly.
std::vector<double> clenshaw_curtis_nodes(int s);

/// Roots of the degree-s Legendre polynomial shifted to (0,1). Newton
/// iteration on the recurrence at extended precision; returned nodes are
/// exactly symmetric about 1/2 and satisfy |P_s(2c-1)| <= 1e-14.
std::vector<double> gauss_legendre_nodes(int s);

/// Equispaced nodes (i-1)/(s-1), s >= 2.
std::vector<double> newton_cotes_nodes(int s);

/// Closed-form Clenshaw-Curtis tableau: the interpolatory cosine-sum
/// construction, evaluated at extended precision and rounded at the end.
/// b is the last row of A (c_s = 1).
ButcherTableau cc_tableau(int s);

/// Generic collocation tableau on arbitrary distinct sorted nodes in [0,1]:
///   a_ij = ∫_0^{c_i} l_j,  b_j = ∫_0^1 l_j
/// with the Lagrange basis integrated by Gauss quadrature at extended
/// precision (exact for the polynomial integrands). Serves as the oracle for
/// cc_tableau and as the Gauss-Legendre / Newton-Cotes construction path.
ButcherTableau collocation_tableau(const std::vector<double>& nodes,
                                   Family family = Family::Custom);

/// Dispatch by family; GL allows s >= 1, CC/NC need s >= 2.
ButcherTableau family_tableau(Family f, int s);

/// Monic-normalized node polynomial M_s(τ) = (1/s!) Π (τ - c_i), monomial
/// coefficients ascending, kept at extended precision.
struct CollocationKernel {
    int s = 0;
    std::vector<BigFloat> coeffs;
};

/// Kernel from double-precision nodes. Moment residuals are then limited to
/// ~1e-16 of scale; prefer family_kernel for accuracy-order analysis.
CollocationKernel collocation_kernel(const std::vector<double>& nodes);

/// Kernel with the family's nodes generated directly at extended precision.
CollocationKernel family_kernel(Family f, int s);

/// Accuracy order by the vanishing-moment criterion:
/// m = #{ j : ∫_0^1 M_s(τ) τ^j dτ = 0, j = 0..m-1 }, order = s + m.
struct OrderReport {
    int s = 0;
    int m = 0;
    int order = 0;
    std::vector<double> moments; // residuals, first s moments
};

OrderReport order_of(const CollocationKernel& kernel);

/// JSON export/import. Numbers are decimal strings with 17 significant
/// digits; "A" is row-major.
std::string tableau_to_json(const ButcherTableau& t);
ButcherTableau tableau_from_json(const std::string& text);

} // namespace colloc

#endif
