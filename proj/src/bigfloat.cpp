#include "colloc/bigfloat.hpp"

#include <mutex>

#include <boost/math/constants/constants.hpp>

namespace colloc {

namespace {

// default_precision is process-global in the mpfr backend; serialize every
// scope that overrides it
std::recursive_mutex& precision_mutex()
{
    static std::recursive_mutex m;
    return m;
}

// mpfr caches constants (pi in particular) per precision; release them at
// process exit so leak checkers stay quiet
struct CacheRelease {
    ~CacheRelease() { mpfr_free_cache(); }
} const cache_release;

} // namespace

PrecisionGuard::PrecisionGuard(int bits)
{
    precision_mutex().lock();
    saved_ = static_cast<int>(BigFloat::default_precision());
    BigFloat::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard()
{
    BigFloat::default_precision(saved_);
    precision_mutex().unlock();
}

BigFloat big_pi()
{
    return boost::math::constants::pi<BigFloat>();
}

void release_thread_caches()
{
    mpfr_free_cache();
}

} // namespace colloc
