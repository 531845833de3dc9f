#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "wright/errors.hpp"
#include "wright/param_deriv.hpp"
#include "wright/scalar.hpp"
#include "wright/wright.hpp"

using namespace wright;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = 0.57721566490153286060651209;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double central1(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2 * h);
}

// fourth-order five-point stencil
double central1_o4(const std::function<double(double)>& f, double x, double h)
{
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double central2(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

double w(double a, double b, double t) { return wright_eval({a, b}, t).value; }

// sum psi(k+1) t^k/(k!)^2 with psi(k+1) = H_k - gamma_E, in long double.
long double harmonic_series(long double t)
{
    long double term = 1.0L;
    long double h = 0.0L;
    long double sum = -static_cast<long double>(euler_gamma);
    for (int k = 1; k < 120; ++k) {
        term *= t / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        sum += term * (h - static_cast<long double>(euler_gamma));
    }
    return sum;
}

}  // namespace

TEST_CASE("first-kind derivatives match finite differences")
{
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.5, 1.0, 1.5}) {
            for (double t : {0.5, 1.0, 2.0}) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(t);
                const WrightParams p(a, b);
                const auto in_a = [b, t](double x) { return w(x, b, t); };
                const auto in_b = [a, t](double x) { return w(a, x, t); };
                CHECK(rel(dW_dalpha(p, t).value, central1(in_a, a, 1e-4)) <= 1e-6);
                CHECK(rel(dW_dbeta(p, t).value, central1(in_b, b, 1e-4)) <= 1e-6);
                CHECK(rel(d2W_dalpha2(p, t).value, central2(in_a, a, 1e-3)) <= 1e-4);
                CHECK(rel(d2W_dbeta2(p, t).value, central2(in_b, b, 1e-3)) <= 1e-4);
                const auto e_a = [b, t](double x) { return mittag_leffler(x, b, t).value; };
                const auto e_b = [a, t](double x) { return mittag_leffler(a, x, t).value; };
                CHECK(rel(dE_dalpha(a, b, t).value, central1(e_a, a, 1e-4)) <= 1e-6);
                CHECK(rel(dE_dbeta(a, b, t).value, central1(e_b, b, 1e-4)) <= 1e-6);
            }
        }
    }
}

TEST_CASE("Mainardi sigma-derivatives match finite differences")
{
    for (double s : {0.25, 0.5, 0.75}) {
        for (double t : {0.5, 1.0, 2.0}) {
            CAPTURE(s);
            CAPTURE(t);
            const auto m = [t](double x) { return mainardi_m(SigmaParam(x), t).value; };
            const auto f = [t](double x) { return mainardi_f(SigmaParam(x), t).value; };
            const SigmaParam sp(s);
            CHECK(rel(dM_dsigma(sp, t).value, central1_o4(m, s, 1e-3)) <= 1e-6);
            CHECK(rel(dF_dsigma(sp, t).value, central1_o4(f, s, 1e-3)) <= 1e-6);
            CHECK(rel(d2M_dsigma2(sp, t).value, central2(m, s, 1e-3)) <= 1e-4);
            CHECK(rel(d2F_dsigma2(sp, t).value, central2(f, s, 1e-3)) <= 1e-4);
        }
    }
}

TEST_CASE("central difference truncation for dF/dsigma at sigma = 3/4")
{
    // dF/dsigma is small here relative to the third derivative, so the
    // step-1e-4 central difference itself is off by more than 1e-6 relative;
    // its error matches h^2/6 times the third derivative
    const double s = 0.75;
    const double h = 1e-4;
    for (double t : {0.5, 2.0}) {
        const auto f = [t](double x) { return mainardi_f(SigmaParam(x), t).value; };
        const auto d2 = [t](double x) { return d2F_dsigma2(SigmaParam(x), t).value; };
        const double exact = dF_dsigma(SigmaParam(s), t).value;
        const double fd = central1(f, s, h);
        const double third = central1_o4(d2, s, 1e-3);
        CHECK(rel(fd, exact) > 1e-6);
        CHECK(fd - exact == doctest::Approx(h * h / 6 * third).epsilon(1e-2));
    }
}

TEST_CASE("structural identities between F and M derivatives")
{
    for (double s : {0.25, 0.4, 0.5, 0.75}) {
        for (double t : {0.5, 1.0, 2.0}) {
            const SigmaParam sp(s);
            const double m = mainardi_m(sp, t).value;
            const double dm = dM_dsigma(sp, t).value;
            const double d2m = d2M_dsigma2(sp, t).value;
            CHECK(std::fabs(dF_dsigma(sp, t).value - (t * m + s * t * dm)) <= 1e-8);
            CHECK(std::fabs(d2F_dsigma2(sp, t).value - (2 * t * dm + s * t * d2m)) <= 1e-8);
        }
    }
}

TEST_CASE("dW/dbeta at alpha = beta = 1 is a K0/I0 combination")
{
    CHECK(rel(dW_dbeta({1, 1}, 1.0).value, -std::cyl_bessel_k(0.0, 2.0)) < 1e-13);
    CHECK(rel(dW_dbeta({1, 1}, 1.0).value, -0.1138938727495334) < 1e-12);
    for (double t = 0.25; t <= 4.0 + 1e-12; t += 0.25) {
        const double x = 2 * std::sqrt(t);
        const double closed = 0.5 * std::log(t) * std::cyl_bessel_i(0.0, x) + std::cyl_bessel_k(0.0, x);
        CHECK(std::fabs(static_cast<double>(harmonic_series(t)) - closed) <= 1e-12);
        CHECK(std::fabs(dW_dbeta({1, 1}, t).value + closed) <= 1e-9);
    }
}

TEST_CASE("values at t = 0")
{
    for (double a : {0.0, 0.5, 2.0}) {
        for (double b : {0.5, 1.0, 2.5}) {
            const WrightParams p(a, b);
            CHECK(dW_dalpha(p, 0.0).value == 0.0);
            CHECK(d2W_dalpha2(p, 0.0).value == 0.0);
            const double psi = digamma(b);
            CHECK(rel(dW_dbeta(p, 0.0).value, -psi / std::tgamma(b)) < 1e-14);
            CHECK(rel(d2W_dbeta2(p, 0.0).value, (psi * psi - trigamma(b)) / std::tgamma(b)) < 1e-14);
        }
    }
    CHECK(rel(dE_dbeta(1, 1, 0).value, euler_gamma) < 1e-15);
    CHECK(dE_dalpha(0.7, 1.3, 0).value == 0.0);
    for (double s : {0.25, 0.5, 0.75}) {
        const SigmaParam sp(s);
        const double g = std::tgamma(s);
        const double psi = digamma(s);
        const double sn = std::sin(pi * s);
        const double cs = std::cos(pi * s);
        CHECK(rel(dM_dsigma(sp, 0).value, g * (psi * sn + pi * cs) / pi) < 1e-13);
        const double c2 = g * ((trigamma(s) + psi * psi) * sn + 2 * pi * psi * cs - pi * pi * sn) / pi;
        CHECK(rel(d2M_dsigma2(sp, 0).value, c2) < 1e-13);
        // F_sigma(0) = 0 for every sigma
        CHECK(dF_dsigma(sp, 0).value == 0.0);
        CHECK(d2F_dsigma2(sp, 0).value == 0.0);
    }
}

TEST_CASE("beta = 0 uses the finite pole limit")
{
    // one-sided difference, since beta < 0 is outside the domain
    const double t = 1.5;
    const double h = 1e-5;
    const double fd = (-3 * w(1, 0, t) + 4 * w(1, h, t) - w(1, 2 * h, t)) / (2 * h);
    CHECK(rel(dW_dbeta({1, 0}, t).value, fd) < 1e-8);
    // k = 0 term alone: (1/Gamma)'(0) = 1
    CHECK(dW_dbeta({1, 0}, 0.0).value == 1.0);
}

TEST_CASE("alpha second derivative uses psi at alpha k + beta")
{
    // at beta = 1 the two candidate coefficients coincide; beta = 3/2 separates them
    const double a = 1.0;
    const double b = 1.5;
    const double t = 1.0;
    const double fd = central2([b, t](double x) { return w(x, b, t); }, a, 1e-3);
    double alt = 0.0;
    for (int k = 1; k < 60; ++k) {
        const double psi_one = digamma(a * k + 1);
        alt += k * k * std::pow(t, k) / std::tgamma(k + 1.0) *
               (psi_one * psi_one - trigamma(a * k + b)) / std::tgamma(a * k + b);
    }
    const double v = d2W_dalpha2({a, b}, t).value;
    CHECK(rel(v, fd) <= 1e-4);
    CHECK(rel(alt, fd) > 1e-2);
}

TEST_CASE("large alpha behaviour")
{
    CHECK(rel(dW_dalpha({5, 1}, 2.0).value, -0.0284378868021210454857564510488) < 1e-9);
    // the k = 0 term -psi(1)/Gamma(1) survives as alpha grows
    CHECK(std::fabs(dW_dbeta({60, 1}, 2.0).value - euler_gamma) < 1e-12);
}

TEST_CASE("Bessel closed forms of dW/dbeta")
{
    CHECK(rel(closed_form_dWbeta_bessel(0, 2, BesselSign::Minus), pi / 2 * std::cyl_neumann(0.0, 2.0)) < 1e-14);
    CHECK(rel(closed_form_dWbeta_bessel(0, 2, BesselSign::Plus), -std::cyl_bessel_k(0.0, 2.0)) < 1e-14);
    CHECK(rel(closed_form_dWbeta_bessel(0.5, 1, BesselSign::Minus), 0.0809961871930690154783278131979) < 1e-12);
    CHECK(rel(closed_form_dWbeta_bessel(0.5, 1, BesselSign::Plus), -0.184101576400396410956989987144) < 1e-12);
    CHECK(rel(closed_form_dWbeta_bessel(0.7, 3, BesselSign::Minus), 0.377255022562139343250421000606) < 1e-8);
    CHECK(rel(closed_form_dWbeta_bessel(0.7, 3, BesselSign::Plus), -2.30187618475506050679527403652) < 1e-8);
    CHECK(rel(closed_form_dWbeta_bessel(2.3, 2, BesselSign::Minus), -0.253783882581640925579154886639) < 1e-8);
    CHECK_THROWS_AS(closed_form_dWbeta_bessel(1, 0.0, BesselSign::Minus), DomainError);
    CHECK_THROWS_AS(closed_form_dWbeta_bessel(-0.5, 1.0, BesselSign::Plus), DomainError);
}

TEST_CASE("closed forms agree with the series under x = -+ t^2/4")
{
    for (double b : {0.0, 0.5, 1.0, 0.3, 1.7}) {
        for (double t : {0.5, 1.0, 2.0, 4.0}) {
            CAPTURE(b);
            CAPTURE(t);
            const double minus = dW_dbeta({1, b + 1}, -t * t / 4).value;
            const double plus = dW_dbeta({1, b + 1}, t * t / 4).value;
            CHECK(std::fabs(closed_form_dWbeta_bessel(b, t, BesselSign::Minus) - minus) <=
                  1e-8 * std::max(1.0, std::fabs(minus)));
            CHECK(std::fabs(closed_form_dWbeta_bessel(b, t, BesselSign::Plus) - plus) <=
                  1e-8 * std::max(1.0, std::fabs(plus)));
        }
    }
}

TEST_CASE("curves in alpha have a single minimum")
{
    std::vector<double> alphas;
    for (int i = 1; i <= 100; ++i) {
        alphas.push_back(0.05 * i);
    }
    for (double t : {0.5, 1.0, 1.5, 1.75, 2.0}) {
        CAPTURE(t);
        double min_a = 1e300;
        double min_b = 1e300;
        std::vector<double> va;
        std::vector<double> vb;
        for (double a : alphas) {
            va.push_back(dW_dalpha({a, 1}, t).value);
            vb.push_back(dW_dbeta({a, 1}, t).value);
            min_a = std::min(min_a, va.back());
            min_b = std::min(min_b, vb.back());
        }
        const auto sign_changes = [](const std::vector<double>& v) {
            int n = 0;
            for (std::size_t i = 2; i < v.size(); ++i) {
                const double g0 = v[i - 1] - v[i - 2];
                const double g1 = v[i] - v[i - 1];
                n += (g0 < 0) != (g1 < 0) ? 1 : 0;
            }
            return n;
        };
        CHECK(sign_changes(va) == 1);
        CHECK(sign_changes(vb) == 1);
        CHECK(std::fabs(min_b) <= std::fabs(min_a));
    }
}

TEST_CASE("domain and convergence errors")
{
    CHECK_THROWS_AS(dW_dalpha({-0.5, 0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(dE_dbeta(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(dM_dsigma(SigmaParam(0.5), -1.0), DomainError);
    CHECK_THROWS_AS(dW_dbeta({0.0, 1.0}, 800.0), DomainError);
    SeriesTolerance few;
    few.max_terms = 4;
    CHECK_FALSE(dW_dalpha({1, 1}, 3.0, few).converged);
    CHECK_FALSE(dE_dalpha(1, 1, 900.0).converged);
}
