#include "wright/wright.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wright/errors.hpp"
#include "wright/scalar.hpp"

namespace wright {

namespace {

// Terms whose magnitude exceeds e^690 leave no usable digits in double.
constexpr double kLogOverflowGuard = 690.0;

void require_finite(double x, const char* fn)
{
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be finite");
    }
}

void validate(const SeriesTolerance& tol)
{
    if (!(tol.rel_tol >= 0.0) || !(tol.abs_tol >= 0.0) || tol.max_terms < 1) {
        throw DomainError("series tolerance: tolerances must be >= 0 and max_terms >= 1");
    }
}

// m * 2^e with a long double mantissa: running products of ratios keep
// the 64-bit precision and never overflow.
class LongScaled {
public:
    explicit LongScaled(long double v = 0.0L) noexcept { assign(v, 0); }

    static LongScaled from_log(long double log_abs, int sign) noexcept
    {
        constexpr long double ln2 = 0.693147180559945309417232121458176568L;
        const long double e = std::floor(log_abs / ln2);
        LongScaled r;
        r.assign(sign * std::exp(log_abs - e * ln2), static_cast<long>(e));
        return r;
    }

    LongScaled& operator*=(long double f) noexcept
    {
        assign(mant_ * f, exp_);
        return *this;
    }
    friend LongScaled operator*(LongScaled a, const LongScaled& b) noexcept
    {
        a.assign(a.mant_ * b.mant_, a.exp_ + b.exp_);
        return a;
    }

    bool is_zero() const noexcept { return mant_ == 0.0L; }
    long double value() const noexcept
    {
        const long e = exp_ > 20000 ? 20000 : (exp_ < -20000 ? -20000 : exp_);
        return std::ldexp(mant_, static_cast<int>(e));
    }
    long double log_abs() const noexcept
    {
        return std::log(std::fabs(mant_)) + static_cast<long double>(exp_) * 0.693147180559945309417232121458176568L;
    }

private:
    void assign(long double m, long e) noexcept
    {
        int k = 0;
        mant_ = std::frexp(m, &k);
        exp_ = mant_ == 0.0L ? 0 : e + k;
    }

    long double mant_ = 0.0L;
    long exp_ = 0;
};

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// sin(pi x) with exact reduction, exact zeros at the integers.
long double sinpi_l(long double x)
{
    long double r = std::fmod(x, 2.0L);
    if (r < 0.0L) {
        r += 2.0L;
    }
    long double sign = 1.0L;
    if (r >= 1.0L) {
        sign = -1.0L;
        r -= 1.0L;
    }
    if (r > 0.5L) {
        r = 1.0L - r;
    }
    return r == 0.0L ? 0.0L : sign * std::sin(kPiL * r);
}

// Gamma(y) for y > 0 in scaled form.
LongScaled gamma_l(long double y)
{
    if (y < 1700.0L) {
        return LongScaled(std::tgamma(y));
    }
    return LongScaled::from_log(std::lgamma(y), 1);
}

// 1/Gamma(y) = magnitude * oscillation, with the reflection for y < 1/2.
struct RgammaPartsL {
    LongScaled magnitude;
    long double oscillation;
};

RgammaPartsL rgamma_parts_l(long double y)
{
    if (y >= 0.5L) {
        if (y < 1700.0L) {
            return {LongScaled(1.0L / std::tgamma(y)), 1.0L};
        }
        return {LongScaled::from_log(-std::lgamma(y), 1), 1.0L};
    }
    LongScaled m = gamma_l(1.0L - y);
    m *= 1.0L / kPiL;
    return {m, sinpi_l(y)};
}

// Relative error of one term: a few roundings in the gamma value, sine and
// running product, each at the long double unit roundoff.
constexpr double kTermRoundoff = 16.0 * std::numeric_limits<long double>::epsilon();

// sum_k x^k/Gamma(a k + b), with an extra 1/k! when with_factorial is set.
SeriesEval power_rgamma_series(double a, double b, double x, bool with_factorial,
                               const SeriesTolerance& tol, const char* fn, bool throw_on_overflow)
{
    validate(tol);
    BasicSeriesAccumulator<long double> acc(tol, kTermRoundoff);
    LongScaled p(1.0L);
    for (int k = 0;; ++k) {
        const long double y = static_cast<long double>(a) * k + b;
        const auto [mag, osc] = rgamma_parts_l(y);
        const LongScaled env = p * mag;
        if (!env.is_zero() && env.log_abs() > kLogOverflowGuard) {
            if (throw_on_overflow) {
                throw DomainError(std::string(fn) + ": |argument| " + std::to_string(x) +
                                  " exceeds the overflow-safe range for alpha = " + std::to_string(a));
            }
            acc.add(std::numeric_limits<long double>::infinity(), std::numeric_limits<long double>::infinity());
            break;
        }
        const long double e = env.value();
        if (acc.add(e * osc, std::fabs(e))) {
            break;
        }
        p *= with_factorial ? x / (k + 1.0L) : static_cast<long double>(x);
    }
    return acc.result();
}

}  // namespace

WrightParams::WrightParams(double alpha, double beta) : alpha_(alpha), beta_(beta)
{
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw DomainError("WrightParams: alpha and beta must be finite");
    }
    if (alpha <= -1.0) {
        throw DomainError("WrightParams: requires alpha > -1");
    }
    if (beta < 0.0) {
        throw DomainError("WrightParams: requires beta >= 0");
    }
}

SigmaParam::SigmaParam(double sigma) : sigma_(sigma)
{
    if (!(sigma > 0.0 && sigma < 1.0)) {
        throw DomainError("SigmaParam: requires 0 < sigma < 1");
    }
}

SeriesEval wright_eval(const WrightParams& p, double t, const SeriesTolerance& tol)
{
    require_finite(t, "wright_eval");
    return power_rgamma_series(p.alpha(), p.beta(), t, true, tol, "wright_eval", true);
}

SeriesEval mittag_leffler(double alpha, double beta, double z, const SeriesTolerance& tol)
{
    require_finite(alpha, "mittag_leffler");
    require_finite(beta, "mittag_leffler");
    require_finite(z, "mittag_leffler");
    if (alpha <= 0.0) {
        throw DomainError("mittag_leffler: requires alpha > 0");
    }
    return power_rgamma_series(alpha, beta, z, false, tol, "mittag_leffler", false);
}

namespace {

void check_mainardi_arg(double t, const char* fn)
{
    require_finite(t, fn);
    if (t < 0.0) {
        throw DomainError(std::string(fn) + ": requires t >= 0");
    }
}

// Reflection-form series of M_sigma (f_series = false) or F_sigma (true).
SeriesEval mainardi_reflection_series(double sigma, double t, bool f_series, const SeriesTolerance& tol)
{
    validate(tol);
    BasicSeriesAccumulator<long double> acc(tol, kTermRoundoff);
    LongScaled p(f_series ? -static_cast<long double>(t) : 1.0L);  // (-t)^k/k! for F, (-t)^(k-1)/(k-1)! for M
    for (int k = 1;; ++k) {
        const long double arg = static_cast<long double>(sigma) * k;
        LongScaled env = p * gamma_l(f_series ? arg + 1.0L : arg);
        env *= 1.0L / kPiL;
        const long double e = env.value();
        const long double osc = f_series ? -sinpi_l(arg) : sinpi_l(arg);
        if (acc.add(e * osc, std::fabs(e))) {
            break;
        }
        p *= f_series ? -t / (k + 1.0L) : -t / static_cast<long double>(k);
    }
    return acc.result();
}

}  // namespace

SeriesEval mainardi_m(SigmaParam s, double t, const SeriesTolerance& tol)
{
    check_mainardi_arg(t, "mainardi_m");
    return mainardi_reflection_series(s.value(), t, false, tol);
}

SeriesEval mainardi_f(SigmaParam s, double t, const SeriesTolerance& tol)
{
    check_mainardi_arg(t, "mainardi_f");
    return mainardi_reflection_series(s.value(), t, true, tol);
}

SeriesEval mainardi_m_rgamma_form(SigmaParam s, double t, const SeriesTolerance& tol)
{
    check_mainardi_arg(t, "mainardi_m_rgamma_form");
    validate(tol);
    const double sigma = s.value();
    SeriesAccumulator acc(tol);
    ScaledReal p(1.0);
    for (int k = 0;; ++k) {
        const ScaledReal term = p * rgamma_scaled(1.0 - sigma * (k + 1));
        const double v = term.value();
        // envelope without the sine of the reflection
        ScaledReal env = p * gamma_scaled(sigma * (k + 1));
        env *= 1.0 / kPi;
        if (acc.add(v, std::fabs(env.value()))) {
            break;
        }
        p *= -t / (k + 1.0);
    }
    return acc.result();
}

SeriesEval mainardi_f_rgamma_form(SigmaParam s, double t, const SeriesTolerance& tol)
{
    check_mainardi_arg(t, "mainardi_f_rgamma_form");
    validate(tol);
    const double sigma = s.value();
    SeriesAccumulator acc(tol);
    ScaledReal p(1.0);
    for (int k = 0;; ++k) {
        const ScaledReal term = p * rgamma_scaled(-sigma * k);
        ScaledReal env = p * gamma_scaled(sigma * k + 1.0);
        env *= 1.0 / kPi;
        if (acc.add(term.value(), std::fabs(env.value()))) {
            break;
        }
        p *= -t / (k + 1.0);
    }
    return acc.result();
}

DecayingSeries::DecayingSeries(std::function<SeriesEval(double)> f, double step, double max_arg)
    : f_(std::move(f)), cutoff_(std::numeric_limits<double>::infinity()), value_at_cutoff_(0.0)
{
    if (!(step > 0.0) || !(max_arg > step)) {
        throw DomainError("DecayingSeries: requires 0 < step < max_arg");
    }
    double last_good = 0.0;
    double last_value = std::fabs(f_(0.0).value);
    for (int i = 1;; ++i) {
        const double z = step * i;
        if (z > max_arg) {
            break;
        }
        SeriesEval r;
        bool ok = true;
        try {
            r = f_(z);
        } catch (const DomainError&) {
            ok = false;
        }
        ok = ok && r.converged && std::fabs(r.value) > 1e4 * r.noise_floor();
        if (!ok) {
            cutoff_ = last_good;
            value_at_cutoff_ = last_value;
            break;
        }
        last_good = z;
        last_value = std::fabs(r.value);
    }
}

double DecayingSeries::operator()(double z) const
{
    if (z > cutoff_) {
        return 0.0;
    }
    return f_(z).value;
}

}  // namespace wright
