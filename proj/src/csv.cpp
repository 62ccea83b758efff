#include "colloc/csv.hpp"

#include <charconv>
#include <cmath>

namespace colloc::csv {

std::string format_number(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";

    const double ax = std::fabs(x);
    const std::chars_format fmt = (ax < 1e-3 || ax >= 1e6)
        ? std::chars_format::scientific
        : std::chars_format::fixed;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, fmt);
    (void)ec;
    return std::string(buf, end);
}

} // namespace colloc::csv
