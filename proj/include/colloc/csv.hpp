#ifndef COLLOC_CSV_HPP
#define COLLOC_CSV_HPP

#include <string>

namespace colloc::csv {

/// Shortest decimal that round-trips the value; scientific notation for
/// |x| < 1e-3 or |x| >= 1e6, plain decimal otherwise. "nan"/"inf"/"-inf"
/// for non-finite values. Deterministic.
std::string format_number(double x);

} // namespace colloc::csv

#endif
