#include "wright/param_deriv.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wright/bessel.hpp"
#include "wright/errors.hpp"
#include "wright/scalar.hpp"

namespace wright {

namespace {

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

// n-th derivative (n = 1, 2) of 1/Gamma at y >= 0, as a scaled magnitude
// times a modest factor, plus a bound on that factor for the envelope.
struct RgammaDerivative {
    ScaledReal scale;
    double factor;
    double bound;
};

RgammaDerivative rgamma_derivative(double y, int n)
{
    if (y < 0.5) {
        // near the pole at 0 the limit forms carry the value directly
        const double v = n == 1 ? rgamma_d1(y) : rgamma_d2(y);
        return {ScaledReal(1.0), v, std::fabs(v) + 1.0};
    }
    const double psi = digamma(y);
    const double f = n == 1 ? -psi : psi * psi - trigamma(y);
    const double b = n == 1 ? 1.0 + std::fabs(psi) : (1.0 + std::fabs(psi)) * (1.0 + std::fabs(psi));
    return {rgamma_scaled(y), f, b};
}

// sum_k k^m x^k/(k!)^{with_factorial} (1/Gamma)^{(n)}(a k + b) for a, b >= 0.
SeriesEval first_kind_series(double a, double b, double x, bool with_factorial, int m, int n,
                             const SeriesTolerance& tol, const char* fn, bool throw_on_overflow)
{
    validate(tol);
    SeriesAccumulator acc(tol);
    ScaledReal p(1.0);
    for (int k = 0;; ++k) {
        const RgammaDerivative d = rgamma_derivative(a * k + b, n);
        ScaledReal env = p * d.scale;
        env *= std::pow(static_cast<double>(k), m);
        if (!env.is_zero() && env.log_abs() + std::log(d.bound) > kLogOverflowGuard) {
            if (throw_on_overflow) {
                throw DomainError(std::string(fn) + ": |argument| " + std::to_string(x) +
                                  " exceeds the overflow-safe range for alpha = " + std::to_string(a));
            }
            acc.add(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
            break;
        }
        const double e = env.value();
        if (acc.add(e * d.factor, std::fabs(e) * d.bound)) {
            break;
        }
        p *= with_factorial ? x / (k + 1.0) : x;
    }
    return acc.result();
}

void require_first_kind(const WrightParams& p, double t, const char* fn)
{
    require_finite(t, fn);
    if (p.kind() != WrightKind::First) {
        throw DomainError(std::string(fn) + ": requires alpha >= 0 (use the sigma-derivatives for the second kind)");
    }
}

void require_ml(double alpha, double beta, double t, const char* fn)
{
    require_finite(alpha, fn);
    require_finite(beta, fn);
    require_finite(t, fn);
    if (alpha <= 0.0 || beta < 0.0) {
        throw DomainError(std::string(fn) + ": requires alpha > 0 and beta >= 0");
    }
}

// n-th sigma-derivative (n = 1, 2) of M_sigma (f_series = false) or F_sigma.
// With g = Gamma(y), y = sigma k (+1 for F), and s, c = sin, cos(pi sigma k):
//   d/dsigma  [g s] = k g [psi s + pi c]
//   d2/dsigma2[g s] = k^2 g [(psi' + psi^2) s + 2 pi psi c - pi^2 s]
SeriesEval mainardi_derivative(double sigma, double t, bool f_series, int n, const SeriesTolerance& tol,
                               const char* fn)
{
    require_finite(t, fn);
    if (t < 0.0) {
        throw DomainError(std::string(fn) + ": requires t >= 0");
    }
    validate(tol);
    constexpr double pi = kPi;
    SeriesAccumulator acc(tol);
    ScaledReal p(f_series ? -t : 1.0);  // (-t)^k/k! for F, (-t)^(k-1)/(k-1)! for M
    for (int k = 1;; ++k) {
        const double arg = sigma * k;
        const double y = f_series ? arg + 1.0 : arg;
        const double s = sinpi(arg);
        const double c = cospi(arg);
        const double psi = digamma(y);
        double g = 0.0;
        double bound = 0.0;
        if (n == 1) {
            g = psi * s + pi * c;
            bound = std::fabs(psi) + pi;
        } else {
            const double psi1 = trigamma(y);
            g = (psi1 + psi * psi) * s + 2.0 * pi * psi * c - pi * pi * s;
            bound = psi1 + psi * psi + 2.0 * pi * std::fabs(psi) + pi * pi;
        }
        ScaledReal env = p * gamma_scaled(y);
        env *= std::pow(static_cast<double>(k), n) / pi;
        const double e = env.value();
        const double term = f_series ? -e * g : e * g;
        if (acc.add(term, std::fabs(e) * bound)) {
            break;
        }
        p *= f_series ? -t / (k + 1.0) : -t / k;
    }
    return acc.result();
}

}  // namespace

SeriesEval dW_dalpha(const WrightParams& p, double t, const SeriesTolerance& tol)
{
    require_first_kind(p, t, "dW_dalpha");
    return first_kind_series(p.alpha(), p.beta(), t, true, 1, 1, tol, "dW_dalpha", true);
}

SeriesEval dW_dbeta(const WrightParams& p, double t, const SeriesTolerance& tol)
{
    require_first_kind(p, t, "dW_dbeta");
    return first_kind_series(p.alpha(), p.beta(), t, true, 0, 1, tol, "dW_dbeta", true);
}

SeriesEval d2W_dalpha2(const WrightParams& p, double t, const SeriesTolerance& tol)
{
    require_first_kind(p, t, "d2W_dalpha2");
    return first_kind_series(p.alpha(), p.beta(), t, true, 2, 2, tol, "d2W_dalpha2", true);
}

SeriesEval d2W_dbeta2(const WrightParams& p, double t, const SeriesTolerance& tol)
{
    require_first_kind(p, t, "d2W_dbeta2");
    return first_kind_series(p.alpha(), p.beta(), t, true, 0, 2, tol, "d2W_dbeta2", true);
}

SeriesEval dE_dalpha(double alpha, double beta, double t, const SeriesTolerance& tol)
{
    require_ml(alpha, beta, t, "dE_dalpha");
    return first_kind_series(alpha, beta, t, false, 1, 1, tol, "dE_dalpha", false);
}

SeriesEval dE_dbeta(double alpha, double beta, double t, const SeriesTolerance& tol)
{
    require_ml(alpha, beta, t, "dE_dbeta");
    return first_kind_series(alpha, beta, t, false, 0, 1, tol, "dE_dbeta", false);
}

SeriesEval dF_dsigma(SigmaParam s, double t, const SeriesTolerance& tol)
{
    return mainardi_derivative(s.value(), t, true, 1, tol, "dF_dsigma");
}

SeriesEval dM_dsigma(SigmaParam s, double t, const SeriesTolerance& tol)
{
    return mainardi_derivative(s.value(), t, false, 1, tol, "dM_dsigma");
}

SeriesEval d2F_dsigma2(SigmaParam s, double t, const SeriesTolerance& tol)
{
    return mainardi_derivative(s.value(), t, true, 2, tol, "d2F_dsigma2");
}

SeriesEval d2M_dsigma2(SigmaParam s, double t, const SeriesTolerance& tol)
{
    return mainardi_derivative(s.value(), t, false, 2, tol, "d2M_dsigma2");
}

double closed_form_dWbeta_bessel(double beta, double t, BesselSign sign)
{
    require_finite(beta, "closed_form_dWbeta_bessel");
    require_finite(t, "closed_form_dWbeta_bessel");
    if (t <= 0.0) {
        throw DomainError("closed_form_dWbeta_bessel: requires t > 0");
    }
    if (beta < 0.0) {
        throw DomainError("closed_form_dWbeta_bessel: requires beta >= 0");
    }
    const bool j = sign == BesselSign::Minus;
    const double l = std::log(2.0 / t);
    if (beta == 0.0) {
        return j ? l * bessel_j(0, t) + kPi / 2 * bessel_y(0, t) : l * bessel_i(0, t) - bessel_k(0, t);
    }
    if (beta == 1.0) {
        const double d = j ? bessel_j(0, t) / t + kPi / 2 * bessel_y(1, t) : bessel_k(1, t) - bessel_i(0, t) / t;
        return 2.0 / t * (l * (j ? bessel_j(1, t) : bessel_i(1, t)) + d);
    }
    if (beta == 0.5) {
        const double d = j ? std::sqrt(2.0 / (kPi * t)) * (std::sin(t) * ci(2 * t) - std::cos(t) * si(2 * t))
                           : (std::exp(t) * ei(-2 * t) - std::exp(-t) * ei(2 * t)) / std::sqrt(2.0 * kPi * t);
        return std::sqrt(2.0 / t) * (l * (j ? bessel_j(0.5, t) : bessel_i(0.5, t)) + d);
    }
    const QuadResult q = j ? bessel_j_order_derivative_quadrature(beta, t) : bessel_i_order_derivative_quadrature(beta, t);
    if (!q.converged) {
        throw ConvergenceError("closed_form_dWbeta_bessel: order-derivative quadrature did not converge");
    }
    return std::pow(2.0 / t, beta) * (l * (j ? bessel_j(beta, t) : bessel_i(beta, t)) + q.value);
}

}  // namespace wright
