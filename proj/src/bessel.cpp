#include "wright/bessel.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/hypergeometric_0F1.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include "wright/errors.hpp"
#include "wright/scalar.hpp"
#include "wright/series.hpp"

namespace wright {

namespace {

void check_bessel_args(const char* fn, double nu, double t)
{
    if (!std::isfinite(nu) || !std::isfinite(t)) {
        throw DomainError(std::string(fn) + ": arguments must be finite");
    }
    if (t <= 0.0) {
        throw DomainError(std::string(fn) + ": requires t > 0");
    }
    if (std::fabs(nu) > kMaxBesselOrder) {
        throw DomainError(std::string(fn) + ": requires |nu| <= 200");
    }
}

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

// Breakpoints accumulating geometrically towards pi/2.
std::vector<double> graded_mesh()
{
    std::vector<double> pts{0.0, 0.25 * kPi};
    double gap = 0.25 * kPi;
    for (int j = 0; j < 16; ++j) {
        gap *= 0.5;
        pts.push_back(0.5 * kPi - gap);
    }
    pts.push_back(0.5 * kPi);
    return pts;
}

void check_order_derivative_args(const char* fn, double beta, double t)
{
    if (!std::isfinite(beta) || !std::isfinite(t)) {
        throw DomainError(std::string(fn) + ": arguments must be finite");
    }
    if (beta <= 0.0) {
        throw DomainError(std::string(fn) + ": requires beta > 0");
    }
    if (t <= 0.0) {
        throw DomainError(std::string(fn) + ": requires t > 0");
    }
}

}  // namespace

double bessel_j(double nu, double t)
{
    check_bessel_args("bessel_j", nu, t);
    return guarded("bessel_j", [=] { return boost::math::cyl_bessel_j(nu, t); });
}

double bessel_y(double nu, double t)
{
    check_bessel_args("bessel_y", nu, t);
    return guarded("bessel_y", [=] { return boost::math::cyl_neumann(nu, t); });
}

double bessel_i(double nu, double t)
{
    check_bessel_args("bessel_i", nu, t);
    return guarded("bessel_i", [=] { return boost::math::cyl_bessel_i(nu, t); });
}

double bessel_k(double nu, double t)
{
    check_bessel_args("bessel_k", nu, t);
    return guarded("bessel_k", [=] { return boost::math::cyl_bessel_k(nu, t); });
}

QuadratureSpec order_derivative_spec()
{
    QuadratureSpec spec;
    spec.abs_tol = 1e-9;
    spec.rel_tol = 1e-12;
    return spec;
}

QuadResult bessel_j_order_derivative_quadrature(double beta, double t, const QuadratureSpec& spec)
{
    check_order_derivative_args("bessel_j_order_derivative_quadrature", beta, t);
    auto f = [beta, t](double th) {
        const double s = std::sin(th);
        const double c = std::cos(th);
        const double inner = t * c * c;
        if (inner <= 0.0) {
            return 0.0;
        }
        return (s / c) * bessel_y(0.0, t * s * s) * bessel_j(beta, inner);
    };
    const auto mesh = graded_mesh();
    QuadResult r = integrate(f, mesh, spec);
    r.value *= kPi * beta;
    r.abs_error *= kPi * beta;
    return r;
}

QuadResult bessel_i_order_derivative_quadrature(double beta, double t, const QuadratureSpec& spec)
{
    check_order_derivative_args("bessel_i_order_derivative_quadrature", beta, t);
    auto f = [beta, t](double th) {
        const double s = std::sin(th);
        const double c = std::cos(th);
        const double inner = t * c * c;
        if (inner <= 0.0) {
            return 0.0;
        }
        return (s / c) * bessel_k(0.0, t * s * s) * bessel_i(beta, inner);
    };
    const auto mesh = graded_mesh();
    QuadResult r = integrate(f, mesh, spec);
    r.value *= -2.0 * beta;
    r.abs_error *= 2.0 * beta;
    return r;
}

double hyp0f1(double b, double z)
{
    if (!std::isfinite(b) || !std::isfinite(z)) {
        throw DomainError("hyp0f1: arguments must be finite");
    }
    if (is_nonpositive_integer(b)) {
        throw DomainError("hyp0f1: b must not be a non-positive integer");
    }
    return guarded("hyp0f1", [=] { return boost::math::hypergeometric_0F1(b, z); });
}

double hyp1f1(double a, double b, double z)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
        throw DomainError("hyp1f1: arguments must be finite");
    }
    if (is_nonpositive_integer(b) && !(is_nonpositive_integer(a) && a > b)) {
        throw DomainError("hyp1f1: b must not be a non-positive integer");
    }
    return guarded("hyp1f1", [=] { return boost::math::hypergeometric_1F1(a, b, z); });
}

double hyp2f1(double a, double b, double c, double z, SummationOrder order)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
        throw DomainError("hyp2f1: arguments must be finite");
    }
    // Number of the last non-zero term when the series terminates.
    long last = -1;
    for (double p : {a, b}) {
        if (is_nonpositive_integer(p)) {
            const long n = static_cast<long>(-p);
            last = (last < 0) ? n : std::min(last, n);
        }
    }
    if (is_nonpositive_integer(c) && (last < 0 || static_cast<long>(-c) < last)) {
        throw DomainError("hyp2f1: c is a non-positive integer reached before termination");
    }
    if (last < 0 && std::fabs(z) >= 1.0) {
        throw DomainError("hyp2f1: non-terminating series diverges for |z| >= 1");
    }

    constexpr int kMaxTerms = 200000;
    std::vector<double> terms;
    terms.reserve(last >= 0 ? static_cast<std::size_t>(last) + 1 : 64);
    double term = 1.0;
    terms.push_back(term);
    int small = 0;
    double partial = 1.0;
    for (long k = 0;; ++k) {
        if (last >= 0 && k >= last) {
            break;
        }
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        terms.push_back(term);
        if (!std::isfinite(term)) {
            throw OverflowError("hyp2f1: term overflow");
        }
        if (last < 0) {
            partial += term;
            small = (std::fabs(term) <= 1e-17 * std::fabs(partial)) ? small + 1 : 0;
            if (small >= 3) {
                break;
            }
            if (k >= kMaxTerms) {
                throw ConvergenceError("hyp2f1: series did not converge");
            }
        }
    }

    CompensatedSum sum;
    if (order == SummationOrder::Forward) {
        for (double v : terms) {
            sum.add(v);
        }
    } else {
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            sum.add(*it);
        }
    }
    return sum.value();
}

}  // namespace wright
