#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wright/errors.hpp"
#include "wright/quadrature.hpp"

using namespace wright;

TEST_CASE("polynomials are integrated exactly by one panel")
{
    QuadratureSpec spec;
    spec.max_subdivisions = 0;
    for (int k = 0; k <= 22; ++k) {
        const QuadResult r = integrate([k](double x) { return std::pow(x, k); }, 0.0, 1.0, spec);
        CHECK(r.value == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
        CHECK(r.evaluations == 15);
    }
}

TEST_CASE("smooth and oscillatory finite integrals")
{
    const QuadResult r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
    const QuadResult osc = integrate([](double x) { return std::cos(40 * x); }, 0.0, 1.0);
    CHECK(osc.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-11));
}

TEST_CASE("endpoint singularities")
{
    QuadratureSpec spec;
    const QuadResult log_sing = integrate([](double x) { return std::log(x); }, 0.0, 1.0, spec);
    CHECK(log_sing.converged);
    CHECK(log_sing.value == doctest::Approx(-1.0).epsilon(1e-10));
    spec.endpoint = EndpointBehavior::InverseSqrt;
    const QuadResult inv = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 4.0, spec);
    CHECK(inv.value == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("breakpoints are honoured")
{
    const std::vector<double> pts{0.0, 0.5, 1.0, 2.0};
    const QuadResult r = integrate([](double x) { return x < 1.0 ? 1.0 : 3.0; }, pts);
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("semi-infinite integrals")
{
    const QuadResult e = integrate_semi_infinite([](double t) { return std::exp(-2 * t); }, 0.0);
    CHECK(e.converged);
    CHECK(e.value == doctest::Approx(0.5).epsilon(1e-12));
    const QuadResult c = integrate_semi_infinite([](double t) { return std::exp(-t) * std::cos(5 * t); }, 0.0);
    CHECK(c.value == doctest::Approx(1.0 / 26.0).epsilon(1e-11));
    QuadratureSpec spec;
    spec.endpoint = EndpointBehavior::InverseSqrt;
    const QuadResult g = integrate_semi_infinite([](double t) { return std::exp(-t) / std::sqrt(t); }, 0.0, spec);
    CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-11));
    // an integrand that is zero near the origin is not cut off early
    const QuadResult late = integrate_semi_infinite(
        [](double t) { return t < 3.0 ? 0.0 : std::exp(-(t - 3.0)); }, 0.0);
    CHECK(late.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("failures are reported")
{
    QuadratureSpec spec;
    spec.max_subdivisions = 2;
    const QuadResult r = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, spec);
    CHECK_FALSE(r.converged);
    CHECK(r.abs_error > 0.0);
    spec = QuadratureSpec{};
    spec.max_extent = 1e3;
    const QuadResult tail = integrate_semi_infinite([](double) { return 1.0; }, 0.0, spec);
    CHECK_FALSE(tail.converged);
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), ConvergenceError);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
}
