#include "wright/delta_limits.hpp"

#include <cmath>
#include <memory>

#include "wright/errors.hpp"
#include "wright/report.hpp"
#include "wright/scalar.hpp"
#include "wright/wright.hpp"

namespace wright {

LambornOrder::LambornOrder(double nu) : nu_(nu)
{
    if (!(nu >= 3.0) || !std::isfinite(nu)) {
        throw DomainError("LambornOrder: requires nu >= 3, got nu = " + format_double(nu));
    }
}

bool LambornOrder::is_odd_integer() const noexcept
{
    return nu_ == std::floor(nu_) && std::fmod(nu_, 2.0) == 1.0;
}

double wright_limit_hyp(double t, double beta, LambornOrder nu, SummationOrder order)
{
    const double n = nu.value();
    if (!nu.is_odd_integer()) {
        throw DomainError("wright_limit_hyp: requires an odd integer nu, got nu = " + format_double(n));
    }
    if (!(t > 0.0) || !(t < n)) {
        throw DomainError("wright_limit_hyp: requires 0 < t < nu, got t = " + format_double(t));
    }
    if (!(beta > -1.0) || !std::isfinite(beta)) {
        throw DomainError("wright_limit_hyp: requires beta > -1, got beta = " + format_double(beta));
    }
    return hyp2f1((n + 1.0) / 2.0, (1.0 - n) / 2.0, beta + 1.0, (t * t) / (n * n), order);
}

double wright_limit_approx(double t, double beta, LambornOrder nu)
{
    return wright_limit_hyp(t, beta, nu) * rgamma(beta + 1.0);
}

double lamborn_kernel(double xi, LambornOrder nu)
{
    if (!(xi >= 0.0)) {
        throw DomainError("lamborn_kernel: requires xi >= 0, got xi = " + format_double(xi));
    }
    const double n = nu.value();
    const double r = std::hypot(n, xi);
    return std::exp((n + 1.0) * std::log(n) - std::log(r) - n * std::log(xi + r));
}

QuadratureSpec lamborn_spec()
{
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    spec.max_subdivisions = 4000;
    spec.first_panel = 1.0;
    spec.quiet_panels = 2;
    return spec;
}

double lamborn_limit(const Integrand& f, LambornOrder nu, const QuadratureSpec& spec, double lower)
{
    if (!(lower >= 0.0) || !std::isfinite(lower)) {
        throw DomainError("lamborn_limit: requires a finite lower limit >= 0");
    }
    const Integrand g = [&](double xi) { return f(xi) * lamborn_kernel(xi, nu); };
    const QuadResult q = integrate_semi_infinite(g, lower, spec);
    if (!q.converged) {
        throw ConvergenceError("lamborn_limit: quadrature did not reach tolerance at nu = " +
                               format_double(nu.value()));
    }
    return q.value;
}

double lamborn_limit_series(const SeriesFunction& f, LambornOrder nu, const QuadratureSpec& spec, double lower)
{
    const double negligible = 1e-3 * spec.abs_tol;
    const Integrand g = [&](double xi) {
        const SeriesEval r = f(xi);
        if (r.converged) {
            return r.value;
        }
        if (lamborn_kernel(xi, nu) * (std::fabs(r.value) + r.noise_floor()) <= negligible) {
            return 0.0;
        }
        throw ConvergenceError("lamborn_limit: series unresolved at xi = " + format_double(xi) +
                               " where the kernel is not negligible");
    };
    return lamborn_limit(g, nu, spec, lower);
}

namespace {

DeltaTarget kernel_target(std::string name, double alpha, double beta, double lambda, bool bessel_argument,
                          double target)
{
    const WrightParams p(alpha, beta);
    const SeriesFunction f = [p, lambda, bessel_argument](double xi) {
        return wright_eval(p, bessel_argument ? -lambda * lambda * xi * xi / 4.0 : lambda * xi);
    };
    std::string params = param_tuple({{"alpha", alpha}, {"beta", beta}, {"lambda", lambda}});
    if (bessel_argument) {
        params += ";argument=-lambda^2 xi^2/4";
    }
    return {std::move(name), std::move(params), target, [f](LambornOrder nu) { return lamborn_limit_series(f, nu); }};
}

}  // namespace

std::vector<DeltaTarget> delta_targets()
{
    std::vector<DeltaTarget> out;
    out.push_back({"hyp_bessel_j0", param_tuple({{"t", 2.0}, {"beta", 0.0}}), bessel_j(0.0, 2.0),
                   [](LambornOrder nu) { return wright_limit_approx(2.0, 0.0, nu); }});

    const double e = std::exp(1.0);
    out.push_back(kernel_target("kernel_exp_plus", 1.0, 1.0, 1.0, false, e));
    out.push_back(kernel_target("kernel_exp_minus", 1.0, 1.0, -1.0, false, 1.0 / e));
    out.push_back(kernel_target("kernel_ml12_minus", 1.0, 2.0, -1.0, false, 1.0 - 1.0 / e));
    out.push_back(kernel_target("kernel_ml12_plus", 1.0, 2.0, 1.0, false, e - 1.0));

    // The J-type series lose digits like e^{lambda xi} while the kernel decays
    // like e^{-xi} only for xi << nu, so lambda stays below 1.
    const double lambda = 0.5;
    const double r = std::sqrt(1.0 + lambda * lambda);
    const double q = lambda / (1.0 + r);
    out.push_back(kernel_target("kernel_bessel_j0", 1.0, 1.0, lambda, true, 1.0 / r));
    out.push_back(kernel_target("kernel_bessel_j1", 1.0, 2.0, lambda, true, 2.0 / (1.0 + r)));
    out.push_back(kernel_target("kernel_bessel_j2", 1.0, 3.0, lambda, true, (q + q * q * q / 3.0) / lambda));

    const SigmaParam third(1.0 / 3.0);
    const auto f = std::make_shared<DecayingSeries>([third](double z) { return mainardi_f(third, z); });
    out.push_back({"kernel_mainardi_third", param_tuple({{"sigma", 1.0 / 3.0}, {"lambda", 1.0}}),
                   std::exp(-1.0) / 3.0, [f](LambornOrder nu) {
                       const double lower = std::pow(1.0 / f->cutoff(), 3.0);
                       return lamborn_limit([&](double xi) { return (*f)(1.0 / std::cbrt(xi)); }, nu, lamborn_spec(),
                                            lower);
                   }});
    return out;
}

std::vector<DeltaTarget> mittag_leffler_chain()
{
    std::vector<DeltaTarget> out;
    const struct {
        double alpha, beta, lambda;
    } cases[] = {{1.0, 1.0, 1.0}, {1.0, 1.0, -1.0}, {1.0, 2.0, 1.0}};
    for (const auto& c : cases) {
        const SeriesEval e = mittag_leffler(c.alpha, c.beta, c.lambda);
        out.push_back(kernel_target("chain_mittag_leffler", c.alpha, c.beta, c.lambda, false, e.value));
    }
    return out;
}

}  // namespace wright
