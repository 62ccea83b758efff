#include "colloc/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "colloc/chebyshev.hpp"

namespace colloc {

namespace {

// All tableau construction runs at this mantissa width and is rounded to
// double only at the module boundary.
constexpr int kConstructionBits = 256;

std::vector<double> round_symmetric(const std::vector<BigFloat>& c)
{
    const int s = static_cast<int>(c.size());
    std::vector<double> out(s);
    for (int i = 0; i < s / 2; ++i) {
        out[i] = c[i].convert_to<double>();
        out[s - 1 - i] = 1.0 - out[i];
    }
    if (s % 2 == 1) out[s / 2] = 0.5;
    return out;
}

// Chebyshev extrema on [-1,1] at working precision, exactly antisymmetric.
std::vector<BigFloat> cheb_xi_big(int s)
{
    std::vector<BigFloat> xi(s);
    const BigFloat pi = big_pi();
    for (int i = 0; i < s / 2; ++i) {
        xi[i] = -cos(i * pi / (s - 1));
        xi[s - 1 - i] = -xi[i];
    }
    if (s % 2 == 1) xi[s / 2] = 0;
    xi[0] = -1;
    xi[s - 1] = 1;
    return xi;
}

std::vector<BigFloat> cc_nodes_big(int s)
{
    if (s < 2) throw std::domain_error("clenshaw_curtis_nodes: s must be >= 2");
    std::vector<BigFloat> c(s);
    const std::vector<BigFloat> xi = cheb_xi_big(s);
    for (int i = 0; i < s; ++i) c[i] = (1 + xi[i]) / 2;
    return c;
}

std::vector<BigFloat> nc_nodes_big(int s)
{
    if (s < 2) throw std::domain_error("newton_cotes_nodes: s must be >= 2");
    std::vector<BigFloat> c(s);
    for (int i = 0; i < s; ++i) c[i] = BigFloat(i) / (s - 1);
    return c;
}

// Legendre value/derivative pair by the three-term recurrence.
void legendre_pair(int n, const BigFloat& x, BigFloat& p, BigFloat& dp)
{
    BigFloat pm1(1), pk(x);
    if (n == 0) { p = 1; dp = 0; return; }
    for (int k = 1; k < n; ++k) {
        BigFloat pk1 = ((2 * k + 1) * x * pk - k * pm1) / (k + 1);
        pm1 = pk;
        pk = pk1;
    }
    p = pk;
    dp = n * (x * pk - pm1) / (x * x - 1);
}

// Roots of P_s on (-1,1) at working precision, ascending, exactly
// antisymmetric. Damped Newton from the Chebyshev-angle guesses.
std::vector<BigFloat> legendre_roots_big(int s)
{
    if (s < 1) throw std::domain_error("gauss_legendre_nodes: s must be >= 1");
    const BigFloat pi = big_pi();
    const BigFloat tol = pow(BigFloat(2), -(static_cast<int>(
        BigFloat::default_precision() * 3.32) - 8));
    std::vector<BigFloat> x(s);
    for (int i = 0; i < s / 2; ++i) {
        // i-th smallest root; guesses ordered descending in cos.
        BigFloat xk = cos(pi * (4 * (s - i) - 1) / (4 * s + 2));
        BigFloat p, dp;
        bool done = false;
        for (int it = 0; it < 200 && !done; ++it) {
            legendre_pair(s, xk, p, dp);
            BigFloat step = p / dp;
            // Damping: keep the iterate inside (-1,1).
            while (abs(xk - step) >= 1) step /= 2;
            xk -= step;
            done = abs(step) < tol;
        }
        if (!done)
            throw std::runtime_error("gauss_legendre_nodes: Newton did not converge");
        x[i] = xk;
        x[s - 1 - i] = -xk;
    }
    if (s % 2 == 1) x[s / 2] = 0;
    return x;
}

struct BigQuadRule {
    std::vector<BigFloat> x; // on [-1,1]
    std::vector<BigFloat> w;
};

BigQuadRule gauss_rule_big(int n)
{
    BigQuadRule rule;
    rule.x = legendre_roots_big(n);
    rule.w.resize(n);
    for (int i = 0; i < n; ++i) {
        BigFloat p, dp;
        legendre_pair(n, rule.x[i], p, dp);
        rule.w[i] = 2 / ((1 - rule.x[i] * rule.x[i]) * dp * dp);
    }
    return rule;
}

// ∫_0^{upper} l_j(t) dt for every j at once; `rule` must integrate
// degree s-1 exactly.
std::vector<BigFloat> lagrange_integrals(const std::vector<BigFloat>& c,
                                         const std::vector<BigFloat>& denom,
                                         const BigQuadRule& rule,
                                         const BigFloat& upper)
{
    const int s = static_cast<int>(c.size());
    std::vector<BigFloat> acc(s, BigFloat(0));
    if (upper == 0) return acc;
    const BigFloat half = upper / 2;
    std::vector<BigFloat> prefix(s + 1), suffix(s + 1);
    for (std::size_t m = 0; m < rule.x.size(); ++m) {
        const BigFloat t = half * (rule.x[m] + 1);
        prefix[0] = 1;
        for (int k = 0; k < s; ++k) prefix[k + 1] = prefix[k] * (t - c[k]);
        suffix[s] = 1;
        for (int k = s - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * (t - c[k]);
        const BigFloat wm = rule.w[m] * half;
        for (int j = 0; j < s; ++j)
            acc[j] += wm * prefix[j] * suffix[j + 1] / denom[j];
    }
    return acc;
}

ButcherTableau collocation_tableau_big(const std::vector<BigFloat>& cbig,
                                       const std::vector<double>& c_rounded,
                                       Family family)
{
    const int s = static_cast<int>(cbig.size());
    std::vector<BigFloat> denom(s, BigFloat(1));
    for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k)
            if (k != j) denom[j] *= cbig[j] - cbig[k];

    const BigQuadRule rule = gauss_rule_big(s + 1);

    ButcherTableau t;
    t.s = s;
    t.family = family;
    t.c = c_rounded;
    t.A.assign(static_cast<std::size_t>(s) * s, 0.0);
    for (int i = 0; i < s; ++i) {
        std::vector<BigFloat> row = lagrange_integrals(cbig, denom, rule, cbig[i]);
        for (int j = 0; j < s; ++j) t.a(i, j) = row[j].convert_to<double>();
    }
    if (cbig[s - 1] == 1) {
        t.b.assign(t.A.end() - s, t.A.end());
    } else {
        std::vector<BigFloat> row = lagrange_integrals(cbig, denom, rule, BigFloat(1));
        t.b.resize(s);
        for (int j = 0; j < s; ++j) t.b[j] = row[j].convert_to<double>();
    }
    return t;
}

void validate_nodes(const std::vector<double>& nodes)
{
    if (nodes.empty()) throw std::invalid_argument("collocation nodes: empty");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < 0.0 || nodes[i] > 1.0)
            throw std::invalid_argument("collocation nodes: outside [0,1]");
        if (i > 0 && !(nodes[i] > nodes[i - 1]))
            throw std::invalid_argument("collocation nodes: not strictly increasing");
    }
}

BigFloat factorial_big(int n)
{
    BigFloat f(1);
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

CollocationKernel kernel_from_big_nodes(const std::vector<BigFloat>& c)
{
    const int s = static_cast<int>(c.size());
    CollocationKernel kernel;
    kernel.s = s;
    std::vector<BigFloat> poly{BigFloat(1)};
    for (int i = 0; i < s; ++i) {
        std::vector<BigFloat> next(poly.size() + 1, BigFloat(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= c[i] * poly[k];
        }
        poly = std::move(next);
    }
    const BigFloat sfact = factorial_big(s);
    for (auto& coef : poly) coef /= sfact;
    kernel.coeffs = std::move(poly);
    return kernel;
}

} // namespace

std::string family_name(Family f)
{
    switch (f) {
        case Family::ClenshawCurtis: return "ClenshawCurtis";
        case Family::GaussLegendre: return "GaussLegendre";
        case Family::NewtonCotes: return "NewtonCotes";
        case Family::Custom: return "Custom";
    }
    return "Custom";
}

std::string family_key(Family f)
{
    switch (f) {
        case Family::ClenshawCurtis: return "cc";
        case Family::GaussLegendre: return "gl";
        case Family::NewtonCotes: return "nc";
        case Family::Custom: return "custom";
    }
    return "custom";
}

std::optional<Family> family_from_string(std::string_view text)
{
    if (text == "cc" || text == "ClenshawCurtis") return Family::ClenshawCurtis;
    if (text == "gl" || text == "GaussLegendre") return Family::GaussLegendre;
    if (text == "nc" || text == "NewtonCotes") return Family::NewtonCotes;
    if (text == "custom" || text == "Custom") return Family::Custom;
    return std::nullopt;
}

std::vector<double> clenshaw_curtis_nodes(int s)
{
    PrecisionGuard guard(kConstructionBits);
    return round_symmetric(cc_nodes_big(s));
}

std::vector<double> gauss_legendre_nodes(int s)
{
    PrecisionGuard guard(kConstructionBits);
    const std::vector<BigFloat> x = legendre_roots_big(s);
    std::vector<BigFloat> c(s);
    for (int i = 0; i < s; ++i) c[i] = (1 + x[i]) / 2;
    return round_symmetric(c);
}

std::vector<double> newton_cotes_nodes(int s)
{
    PrecisionGuard guard(kConstructionBits);
    return round_symmetric(nc_nodes_big(s));
}

ButcherTableau cc_tableau(int s)
{
    if (s < 2) throw std::domain_error("cc_tableau: s must be >= 2");
    PrecisionGuard guard(kConstructionBits);

    const std::vector<BigFloat> xi = cheb_xi_big(s);

    // T_k(xi_j) for k = 0..s.
    std::vector<std::vector<BigFloat>> T(s + 1, std::vector<BigFloat>(s));
    for (int j = 0; j < s; ++j) {
        T[0][j] = 1;
        T[1][j] = xi[j];
        for (int k = 2; k <= s; ++k)
            T[k][j] = 2 * xi[j] * T[k - 1][j] - T[k - 2][j];
    }

    // J[i][m] = ∫_{-1}^{xi_i} T_m.
    std::vector<std::vector<BigFloat>> J(s, std::vector<BigFloat>(s));
    for (int i = 0; i < s; ++i) {
        J[i][0] = xi[i] + 1;
        if (s >= 2) J[i][1] = (xi[i] * xi[i] - 1) / 2;
        for (int m = 2; m < s; ++m) {
            const int sign = (m % 2 == 0) ? -1 : 1; // (-1)^{m+1}
            J[i][m] = ((T[m + 1][i] - sign) / (m + 1) - (T[m - 1][i] - sign) / (m - 1)) / 2;
        }
    }

    ButcherTableau t;
    t.s = s;
    t.family = Family::ClenshawCurtis;
    std::vector<BigFloat> cbig(s);
    for (int i = 0; i < s; ++i) cbig[i] = (1 + xi[i]) / 2;
    t.c = round_symmetric(cbig);
    t.A.assign(static_cast<std::size_t>(s) * s, 0.0);

    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            BigFloat acc(0);
            for (int k = 1; k <= s; ++k) {
                BigFloat term = T[k - 1][j] * J[i][k - 1];
                if (k == 1 || k == s) term /= 2;
                acc += term;
            }
            if (j == 0 || j == s - 1) acc /= 2; // boundary-column halving
            acc /= s - 1;
            t.a(i, j) = acc.convert_to<double>();
        }
    }
    t.b.assign(t.A.end() - s, t.A.end()); // c_s = 1
    return t;
}

ButcherTableau collocation_tableau(const std::vector<double>& nodes, Family family)
{
    validate_nodes(nodes);
    PrecisionGuard guard(kConstructionBits);
    std::vector<BigFloat> cbig(nodes.begin(), nodes.end());
    return collocation_tableau_big(cbig, nodes, family);
}

ButcherTableau family_tableau(Family f, int s)
{
    switch (f) {
        case Family::ClenshawCurtis:
            return cc_tableau(s);
        case Family::GaussLegendre: {
            PrecisionGuard guard(kConstructionBits);
            const std::vector<BigFloat> x = legendre_roots_big(s);
            std::vector<BigFloat> cbig(s);
            for (int i = 0; i < s; ++i) cbig[i] = (1 + x[i]) / 2;
            return collocation_tableau_big(cbig, round_symmetric(cbig), Family::GaussLegendre);
        }
        case Family::NewtonCotes: {
            PrecisionGuard guard(kConstructionBits);
            const std::vector<BigFloat> cbig = nc_nodes_big(s);
            return collocation_tableau_big(cbig, round_symmetric(cbig), Family::NewtonCotes);
        }
        case Family::Custom:
            break;
    }
    throw std::invalid_argument("family_tableau: Custom has no node formula");
}

CollocationKernel collocation_kernel(const std::vector<double>& nodes)
{
    validate_nodes(nodes);
    PrecisionGuard guard(kConstructionBits);
    std::vector<BigFloat> cbig(nodes.begin(), nodes.end());
    return kernel_from_big_nodes(cbig);
}

CollocationKernel family_kernel(Family f, int s)
{
    PrecisionGuard guard(kConstructionBits);
    switch (f) {
        case Family::ClenshawCurtis: return kernel_from_big_nodes(cc_nodes_big(s));
        case Family::GaussLegendre: {
            const std::vector<BigFloat> x = legendre_roots_big(s);
            std::vector<BigFloat> cbig(s);
            for (int i = 0; i < s; ++i) cbig[i] = (1 + x[i]) / 2;
            return kernel_from_big_nodes(cbig);
        }
        case Family::NewtonCotes: return kernel_from_big_nodes(nc_nodes_big(s));
        case Family::Custom: break;
    }
    throw std::invalid_argument("family_kernel: Custom has no node formula");
}

OrderReport order_of(const CollocationKernel& kernel)
{
    PrecisionGuard guard(kConstructionBits);
    OrderReport report;
    report.s = kernel.s;
    report.moments.resize(kernel.s);
    bool still_zero = true;
    for (int j = 0; j < kernel.s; ++j) {
        BigFloat moment(0), scale(0);
        for (std::size_t k = 0; k < kernel.coeffs.size(); ++k) {
            const BigFloat term = kernel.coeffs[k] / static_cast<int>(k + j + 1);
            moment += term;
            scale += abs(term);
        }
        report.moments[j] = moment.convert_to<double>();
        if (still_zero && abs(moment) <= scale * 1e-20)
            report.m = j + 1;
        else
            still_zero = false;
    }
    report.order = report.s + report.m;
    return report;
}

namespace {

std::string digits17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number_string(const nlohmann::json& j, const char* where)
{
    if (!j.is_string())
        throw std::invalid_argument(std::string("tableau JSON: ") + where +
                                    " entries must be decimal strings");
    const std::string& text = j.get_ref<const std::string&>();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw std::invalid_argument(std::string("tableau JSON: bad number in ") + where);
    return v;
}

} // namespace

std::string tableau_to_json(const ButcherTableau& t)
{
    nlohmann::json j;
    j["s"] = t.s;
    j["family"] = family_name(t.family);
    auto dump = [](const std::vector<double>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (double x : v) arr.push_back(digits17(x));
        return arr;
    };
    j["c"] = dump(t.c);
    j["b"] = dump(t.b);
    j["A"] = dump(t.A);
    return j.dump(2);
}

ButcherTableau tableau_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    ButcherTableau t;
    t.s = j.at("s").get<int>();
    if (t.s < 1) throw std::invalid_argument("tableau JSON: s must be >= 1");
    const auto fam = family_from_string(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("tableau JSON: unknown family");
    t.family = *fam;
    auto load = [&](const char* key, std::size_t want) {
        const nlohmann::json& arr = j.at(key);
        if (!arr.is_array() || arr.size() != want)
            throw std::invalid_argument(std::string("tableau JSON: wrong size for ") + key);
        std::vector<double> v;
        v.reserve(want);
        for (const auto& e : arr) v.push_back(parse_number_string(e, key));
        return v;
    };
    const auto n = static_cast<std::size_t>(t.s);
    t.c = load("c", n);
    t.b = load("b", n);
    t.A = load("A", n * n);
    return t;
}

} // namespace colloc
