#ifndef COLLOC_POLYROOTS_HPP
#define COLLOC_POLYROOTS_HPP

#include <vector>

#include "colloc/bigfloat.hpp"

namespace colloc {

/// All roots of a real-coefficient polynomial (ascending coefficients,
/// nonzero leading term) by simultaneous Aberth-Ehrlich iteration at the
/// current working precision. Every returned root carries the residual
/// certificate |p(z)| <= 16 n eps Σ|a_k||z|^k; failure to certify within the
/// iteration cap throws std::runtime_error.
std::vector<BigComplex> aberth_roots(const std::vector<BigFloat>& coeffs,
                                     int max_iter = 500);

} // namespace colloc

#endif
