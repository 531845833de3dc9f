#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wright/bessel.hpp"
#include "wright/errors.hpp"
#include "wright/laplace.hpp"
#include "wright/manifest.hpp"
#include "wright/pairs.hpp"
#include "wright/scalar.hpp"
#include "wright/wright.hpp"

using namespace wright;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

std::vector<TransformPair> pairs_from_text(const std::string& text)
{
    std::istringstream in(text);
    std::vector<TransformPair> out;
    for (const ManifestSection& sec : parse_manifest(in)) {
        for (TransformPair& p : pairs_from_section(sec)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

// E_{alpha,beta}(z) by direct summation in long double (small |z| only).
double ml_oracle(double alpha, double beta, double z)
{
    long double sum = 0.0L;
    long double zk = 1.0L;
    for (int k = 0; k < 200; ++k) {
        sum += zk / std::tgamma(static_cast<long double>(alpha) * k + beta);
        zk *= z;
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("laplace_forward on elementary integrands")
{
    CHECK(rel(laplace_forward([](double) { return 1.0; }, 2.0).value, 0.5) < 1e-12);
    const LaplaceResult j0 =
        laplace_forward_series([](double t) { return wright_eval({1.0, 1.0}, -t); }, 1.0);
    CHECK(rel(j0.value, std::exp(-1.0)) < 1e-9);
    CHECK(j0.evaluations > 0);
    // e^{-t} on [1, 3] only.
    const double finite = laplace_forward([](double t) { return std::exp(-t); }, 1.0, laplace_spec(), 1.0, 3.0).value;
    CHECK(rel(finite, (std::exp(-2.0) - std::exp(-6.0)) / 2.0) < 1e-12);
}

TEST_CASE("transform of M_1/2 against e erfc(1)")
{
    const SigmaParam half(0.5);
    const DecayingSeries m([half](double t) { return mainardi_m(half, t); });
    const double v = laplace_forward(m, 1.0, laplace_spec(), 0.0, m.cutoff()).value;
    CHECK(rel(v, e * std::erfc(1.0)) < 1e-6);
}

TEST_CASE("laplace_forward domain and convergence errors")
{
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(laplace_forward(one, 0.0), DomainError);
    CHECK_THROWS_AS(laplace_forward(one, -1.0), DomainError);
    CHECK_THROWS_AS(laplace_forward(one, 1.0, laplace_spec(), 2.0, 1.0), DomainError);
    // e^{2t} is not dominated by e^{-t}.
    CHECK_THROWS_AS(laplace_forward([](double t) { return std::exp(2.0 * t); }, 1.0), ConvergenceError);
}

TEST_CASE("laplace_forward is linear")
{
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    std::uniform_real_distribution<double> svals(0.5, 4.0);
    const auto f = [](double t) { return std::exp(-t) * std::cos(t); };
    const auto g = [](double t) { return 1.0 / (1.0 + t * t); };
    for (int i = 0; i < 10; ++i) {
        const double a = coef(rng), b = coef(rng), s = svals(rng);
        const double combined = laplace_forward([&](double t) { return a * f(t) + b * g(t); }, s).value;
        const double split = a * laplace_forward(f, s).value + b * laplace_forward(g, s).value;
        CHECK(std::fabs(combined - split) <= 1e-10 * (std::fabs(a) + std::fabs(b)));
    }
}

TEST_CASE("ml_explicit closed values")
{
    CHECK(rel(ml_explicit(2.0, 1.0), e - 2.0) < 1e-13);
    // Normalised by 1/Gamma(beta): e erf(1), not sqrt(pi) e erf(1).
    CHECK(rel(ml_explicit(0.5, 1.0), e * std::erf(1.0)) < 1e-13);
    CHECK(rel(ml_explicit(0.5, 4.0), std::exp(4.0) * std::erf(2.0) / 2.0) < 1e-13);
    CHECK(rel(ml_explicit(1.0, -2.0), -std::expm1(-2.0) / 2.0) < 1e-13);
    CHECK(rel(ml_explicit(3.0, 0.0), 1.0 / 6.0) < 1e-15);
    CHECK_THROWS_AS(ml_explicit(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(ml_explicit(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(ml_explicit(1.0, std::nan("")), DomainError);
    CHECK_THROWS_AS(ml_explicit(1.0, 800.0), OverflowError);
}

TEST_CASE("ml_explicit matches the series on the grid")
{
    for (const double beta : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        for (const double z : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0}) {
            CAPTURE(beta);
            CAPTURE(z);
            CHECK(rel(ml_explicit(beta, z), ml_oracle(1.0, beta + 1.0, z)) < 1e-10);
        }
    }
}

TEST_CASE("incomplete gamma ladder through ml_explicit")
{
    // gamma(n+1, z) = n gamma(n, z) - z^n e^{-z} in Mittag-Leffler form:
    // z E_{1,n+2}(z) = E_{1,n+1}(z) - 1/n!
    for (const double n : {1.0, 2.0, 3.0}) {
        for (const double z : {-2.0, 0.5, 2.0, 5.0}) {
            CAPTURE(n);
            CAPTURE(z);
            CHECK(rel(z * ml_explicit(n + 1.0, z), ml_explicit(n, z) - 1.0 / std::tgamma(n + 1.0)) < 1e-11);
        }
    }
}

TEST_CASE("second-kind transform")
{
    const std::array<double, 3> grid = {0.5, 1.0, 2.0};
    for (const auto& [sigma, beta] : {std::pair{0.5, 0.5}, std::pair{0.5, 1.0}, std::pair{1.0 / 3.0, 2.0 / 3.0}}) {
        const VerificationReport r = second_kind_transform_check(SigmaParam(sigma), beta, grid);
        REQUIRE(r.rows().size() == 3);
        CHECK(r.all_pass());
    }
    // M_{1/2} at s = 1 against e erfc(1).
    const std::array<double, 1> one = {1.0};
    const VerificationReport m = second_kind_transform_check(SigmaParam(0.5), 0.5, one);
    CHECK(rel(m.rows().front().lhs, e * std::erfc(1.0)) < 1e-6);
    // sigma = 1/3, beta = 2/3 against E_{1/3,1}(-1) summed independently.
    const VerificationReport third = second_kind_transform_check(SigmaParam(1.0 / 3.0), 2.0 / 3.0, one);
    CHECK(rel(third.rows().front().lhs, ml_oracle(1.0 / 3.0, 1.0, -1.0)) < 1e-6);
    // s -> 0 surrogate: the total integral is finite.
    const std::array<double, 1> tiny = {1e-3};
    const VerificationReport t = second_kind_transform_check(SigmaParam(0.5), 1.0, tiny);
    CHECK(std::isfinite(t.rows().front().lhs));
}

TEST_CASE("pair examples against independent images")
{
    const auto pairs = pairs_from_text(
        "[pair]\nname = a\nkind = wright_laplace\nalpha = 1\nbeta = 1\nlambda = 1\nsign = -1\ns = 1, 2, 4\n"
        "[pair]\nname = b\nkind = mainardi_half\nvariant = m_scaled\nlambda = 1\ns = 0.5, 1, 2\n"
        "[pair]\nname = c\nkind = mainardi_third_pointwise\nvariant = f3\nlambda = 1\nt = 0.5, 1, 2\n");
    REQUIRE(pairs.size() == 3);
    for (const ParamPoint& p : pairs[0].grid) {
        const double s = p.at("s");
        CHECK(rel(evaluate_pair_point(pairs[0], p).lhs, std::exp(-1.0 / s) / s) < 1e-6);
    }
    for (const ParamPoint& p : pairs[1].grid) {
        CHECK(rel(evaluate_pair_point(pairs[1], p).lhs, std::exp(-std::sqrt(p.at("s")))) < 1e-6);
    }
    for (const ParamPoint& p : pairs[2].grid) {
        const double t = p.at("t");
        const double k = std::sqrt(1.0 / t) / pi * bessel_k(1.0 / 3.0, 2.0 / std::sqrt(27.0 * t));
        CHECK(rel(evaluate_pair_point(pairs[2], p).lhs, k) < 1e-8);
    }
}

TEST_CASE("pair manifest parsing")
{
    const auto pairs = pairs_from_text("[pair]\nname = h\nkind = wright_hyperbolic\nvariant = sinh, cosh\n"
                                       "alpha = 1\nbeta = 1, 2\nlambda = 1\nrho = 0.5\ns = 2, 4\n");
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].name == "h/sinh");
    CHECK(pairs[1].name == "h/cosh");
    CHECK(pairs[0].grid.size() == 4);
    // Key order: alpha, beta, lambda, rho, s with s varying fastest.
    CHECK(pairs[0].grid[0].at("beta") == 1.0);
    CHECK(pairs[0].grid[1].at("s") == 4.0);

    CHECK_THROWS_AS(pairs_from_text("[pair]\nname = x\nkind = nope\ns = 1\n"), ManifestError);
    CHECK_THROWS_AS(pairs_from_text("[pair]\nname = x\nkind = bessel_laplace\nvariant = w9\nlambda = 1\ns = 2\n"),
                    ManifestError);
    CHECK_THROWS_AS(pairs_from_text("[pair]\nname = x\nkind = wright_shift\nalpha = 1\nbeta = 1\nlambda = 1\n"
                                    "rho = 0.6\nsign = 1\ns = 2\n"),
                    ManifestError);
    CHECK_THROWS_AS(pairs_from_text("[pair]\nname = x\nkind = bessel_laplace\nvariant = w11\nlambda = 1\n"),
                    ManifestError);
}

TEST_CASE("shipped pair manifest passes and is deterministic")
{
    const auto pairs = load_pairs(default_pairs_manifest());
    REQUIRE(!pairs.empty());
    for (const TransformPair& p : pairs) {
        const VerificationReport a = verify_pair(p);
        CAPTURE(p.name);
        CHECK(a.all_pass());
        CHECK(a.rows().size() == p.grid.size());
    }
    const VerificationReport x = verify_pair(pairs.front());
    const VerificationReport y = verify_pair(pairs.front());
    std::ostringstream ox, oy;
    x.write_csv(ox);
    y.write_csv(oy);
    CHECK(ox.str() == oy.str());
}
