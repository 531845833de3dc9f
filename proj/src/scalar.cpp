#include "wright/scalar.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "wright/errors.hpp"

namespace wright {

namespace {

void require_finite(double x, const char* fn)
{
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be finite");
    }
}

void reject_pole(double x, const char* fn)
{
    if (is_nonpositive_integer(x)) {
        throw DomainError(std::string(fn) + ": pole at non-positive integer " + std::to_string(x));
    }
}

// Runs a Boost.Math call, translating its exceptions into the library's types.
template <class F>
double guarded(const char* fn, F&& f)
{
    try {
        return f();
    } catch (const std::overflow_error& e) {
        throw OverflowError(std::string(fn) + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw DomainError(std::string(fn) + ": " + e.what());
    } catch (const boost::math::evaluation_error& e) {
        throw ConvergenceError(std::string(fn) + ": " + e.what());
    }
}

// n! as a double for n >= 0 (inf beyond the double range).
double factorial_or_inf(unsigned n)
{
    if (n > boost::math::max_factorial<double>::value) {
        return std::numeric_limits<double>::infinity();
    }
    return boost::math::unchecked_factorial<double>(n);
}

}  // namespace

bool is_nonpositive_integer(double x) noexcept
{
    return x <= 0.0 && std::floor(x) == x;
}

double sinpi(double x)
{
    require_finite(x, "sinpi");
    double r = std::fmod(x, 2.0);
    if (r > 1.0) {
        r -= 2.0;
    } else if (r <= -1.0) {
        r += 2.0;
    }
    if (r == 0.0 || r == 1.0) {
        return 0.0;
    }
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(kPi * r);
}

double cospi(double x)
{
    require_finite(x, "cospi");
    double r = std::fmod(std::fabs(x), 2.0);
    if (r > 1.0) {
        r = 2.0 - r;
    }
    if (r == 0.5) {
        return 0.0;
    }
    if (r <= 0.25) {
        return std::cos(kPi * r);
    }
    if (r < 0.75) {
        return std::sin(kPi * (0.5 - r));
    }
    return -std::cos(kPi * (1.0 - r));
}

double gamma(double x)
{
    require_finite(x, "gamma");
    reject_pole(x, "gamma");
    return guarded("gamma", [x] { return boost::math::tgamma(x); });
}

double lgamma(double x, int* sign)
{
    require_finite(x, "lgamma");
    reject_pole(x, "lgamma");
    int s = 1;
    const double v = guarded("lgamma", [x, &s] { return boost::math::lgamma(x, &s); });
    if (sign != nullptr) {
        *sign = s;
    }
    return v;
}

double rgamma(double x)
{
    require_finite(x, "rgamma");
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    if (x >= 0.5) {
        if (x < 170.0) {
            return 1.0 / boost::math::tgamma(x);
        }
        return std::exp(-boost::math::lgamma(x));
    }
    // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    const double s = sinpi(x) / kPi;
    if (1.0 - x < 170.0) {
        return boost::math::tgamma(1.0 - x) * s;
    }
    return std::copysign(std::exp(boost::math::lgamma(1.0 - x) + std::log(std::fabs(s))), s);
}

double rgamma_d1(double x)
{
    require_finite(x, "rgamma_d1");
    if (is_nonpositive_integer(x)) {
        const auto n = static_cast<unsigned>(-x);
        const double f = factorial_or_inf(n);
        return (n % 2 == 0) ? f : -f;
    }
    return -digamma(x) * rgamma(x);
}

double rgamma_d2(double x)
{
    require_finite(x, "rgamma_d2");
    if (is_nonpositive_integer(x)) {
        const auto n = static_cast<unsigned>(-x);
        const double f = 2.0 * factorial_or_inf(n) * digamma(n + 1.0);
        return (n % 2 == 0) ? -f : f;
    }
    const double p = digamma(x);
    return (p * p - trigamma(x)) * rgamma(x);
}

double digamma(double x)
{
    require_finite(x, "digamma");
    reject_pole(x, "digamma");
    return guarded("digamma", [x] { return boost::math::digamma(x); });
}

double trigamma(double x)
{
    require_finite(x, "trigamma");
    reject_pole(x, "trigamma");
    return guarded("trigamma", [x] { return boost::math::trigamma(x); });
}

double lower_incomplete_gamma(double a, double z)
{
    require_finite(a, "lower_incomplete_gamma");
    require_finite(z, "lower_incomplete_gamma");
    if (a <= 0.0) {
        throw DomainError("lower_incomplete_gamma: requires a > 0");
    }
    if (z < 0.0) {
        throw DomainError("lower_incomplete_gamma: requires z >= 0");
    }
    if (z == 0.0) {
        return 0.0;
    }
    return guarded("lower_incomplete_gamma", [a, z] { return boost::math::tgamma_lower(a, z); });
}

double regularized_lower_gamma(double a, double z)
{
    require_finite(a, "regularized_lower_gamma");
    require_finite(z, "regularized_lower_gamma");
    if (a <= 0.0) {
        throw DomainError("regularized_lower_gamma: requires a > 0");
    }
    if (z < 0.0) {
        throw DomainError("regularized_lower_gamma: requires z >= 0");
    }
    return guarded("regularized_lower_gamma", [a, z] { return boost::math::gamma_p(a, z); });
}

double erf(double x)
{
    if (std::isnan(x)) {
        throw DomainError("erf: argument is NaN");
    }
    return std::erf(x);
}

double erfc(double x)
{
    if (std::isnan(x)) {
        throw DomainError("erfc: argument is NaN");
    }
    return std::erfc(x);
}

double ei(double x)
{
    require_finite(x, "ei");
    if (x == 0.0) {
        throw DomainError("ei: logarithmic singularity at x = 0");
    }
    return guarded("ei", [x] { return boost::math::expint(x); });
}

namespace {

constexpr double kSeriesLimit = 2.0;
constexpr int kMaxIter = 1000;

// Si and Ci together for x > kSeriesLimit, via the continued fraction of E1(ix).
void sici_cf(double x, double& s, double& c)
{
    using cplx = std::complex<double>;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min() * 4.0;
    cplx b(1.0, x);
    cplx cc(1.0 / tiny, 0.0);
    cplx d = 1.0 / b;
    cplx h = d;
    int i = 2;
    for (; i < kMaxIter; ++i) {
        const double a = -static_cast<double>(i - 1) * (i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        cc = b + a / cc;
        const cplx del = cc * d;
        h *= del;
        if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < eps) {
            break;
        }
    }
    if (i == kMaxIter) {
        throw ConvergenceError("si/ci: continued fraction did not converge");
    }
    h *= cplx(std::cos(x), -std::sin(x));
    c = -h.real();
    s = 0.5 * kPi + h.imag();
}

}  // namespace

double si(double x)
{
    require_finite(x, "si");
    if (x < 0.0) {
        return -si(-x);
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x > kSeriesLimit) {
        double s = 0.0;
        double c = 0.0;
        sici_cf(x, s, c);
        return s;
    }
    // sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 60; ++k) {
        term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double add = term / (2.0 * k + 1.0);
        sum += add;
        if (std::fabs(add) < 1e-17 * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

double ci(double x)
{
    require_finite(x, "ci");
    if (x <= 0.0) {
        throw DomainError("ci: requires x > 0");
    }
    if (x > kSeriesLimit) {
        double s = 0.0;
        double c = 0.0;
        sici_cf(x, s, c);
        return c;
    }
    // gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
    const double x2 = x * x;
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double add = term / (2.0 * k);
        sum += add;
        if (std::fabs(add) < 1e-17 * std::fabs(sum)) {
            break;
        }
    }
    return kEulerGamma + std::log(x) + sum;
}

}  // namespace wright
