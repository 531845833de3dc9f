#include "wright/series.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include "wright/scalar.hpp"

namespace wright {

ScaledReal ScaledReal::from_log(double log_abs, int sign) noexcept
{
    constexpr double ln2 = 0.69314718055994530942;
    if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity()) {
        return ScaledReal(0.0);
    }
    const double e = std::floor(log_abs / ln2);
    ScaledReal r;
    r.assign(sign > 0 ? std::exp(log_abs - e * ln2) : -std::exp(log_abs - e * ln2),
             static_cast<long>(e));
    return r;
}

ScaledReal rgamma_scaled(double x)
{
    if (is_nonpositive_integer(x)) {
        return ScaledReal(0.0);
    }
    if (std::fabs(x) < 170.0) {
        return ScaledReal(rgamma(x));
    }
    if (x > 0.0) {
        return ScaledReal::from_log(-boost::math::lgamma(x), 1);
    }
    const double s = sinpi(x) / kPi;
    return ScaledReal::from_log(boost::math::lgamma(1.0 - x) + std::log(std::fabs(s)),
                                s > 0.0 ? 1 : -1);
}

ScaledReal gamma_scaled(double y)
{
    if (y < 170.0) {
        return ScaledReal(boost::math::tgamma(y));
    }
    return ScaledReal::from_log(boost::math::lgamma(y), 1);
}

ReciprocalGammaParts rgamma_parts(double x)
{
    if (x >= 0.5) {
        return {rgamma_scaled(x), 1.0};
    }
    ScaledReal mag = gamma_scaled(1.0 - x);
    mag *= 1.0 / kPi;
    return {mag, sinpi(x)};
}

}  // namespace wright
