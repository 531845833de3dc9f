#include "wright/laplace.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "wright/bessel.hpp"
#include "wright/errors.hpp"
#include "wright/parallel.hpp"
#include "wright/scalar.hpp"

namespace wright {

namespace {

void check_transform_args(double s, double lower, double upper)
{
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("laplace_forward: requires s > 0, got s = " + format_double(s));
    }
    if (!(lower >= 0.0) || !std::isfinite(lower) || !(upper > lower)) {
        throw DomainError("laplace_forward: requires 0 <= lower < upper");
    }
}

}  // namespace

QuadratureSpec laplace_spec()
{
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-10;
    spec.max_subdivisions = 4000;
    spec.first_panel = 1.0;
    spec.quiet_panels = 2;
    return spec;
}

LaplaceResult laplace_forward(const Integrand& f, double s, const QuadratureSpec& spec, double lower, double upper)
{
    check_transform_args(s, lower, upper);
    const Integrand g = [&](double t) {
        const double w = std::exp(-s * t);
        return w == 0.0 ? 0.0 : w * f(t);
    };
    const QuadResult q = std::isinf(upper) ? integrate_semi_infinite(g, lower, spec) : integrate(g, lower, upper, spec);
    if (!q.converged) {
        throw ConvergenceError("laplace_forward: quadrature did not reach tolerance at s = " + format_double(s) +
                               " (estimated error " + format_double(q.abs_error) + ")");
    }
    return {q.value, q.abs_error, q.evaluations};
}

LaplaceResult laplace_forward_series(const SeriesFunction& f, double s, const QuadratureSpec& spec, double lower,
                                     double upper)
{
    const double negligible = 1e-3 * spec.abs_tol;
    const Integrand g = [&](double t) {
        const SeriesEval r = f(t);
        if (r.converged) {
            return r.value;
        }
        const double w = std::exp(-s * t);
        if (w * (std::fabs(r.value) + r.noise_floor()) <= negligible) {
            return 0.0;
        }
        throw ConvergenceError("laplace_forward: series unresolved at t = " + format_double(t) +
                               " where its weight is not negligible");
    };
    return laplace_forward(g, s, spec, lower, upper);
}

double ml_explicit(double beta, double z)
{
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("ml_explicit: requires beta > 0, got beta = " + format_double(beta));
    }
    if (!std::isfinite(z)) {
        throw DomainError("ml_explicit: requires a finite argument");
    }
    if (z == 0.0) {
        return rgamma(beta + 1.0);
    }
    if (z < 0.0) {
        return hyp1f1(1.0, beta + 1.0, z) * rgamma(beta + 1.0);
    }
    const double log_scale = z - beta * std::log(z);
    if (log_scale > 709.0) {
        throw OverflowError("ml_explicit: e^z/z^beta overflows at z = " + format_double(z));
    }
    return std::exp(log_scale) * regularized_lower_gamma(beta, z);
}

VerificationReport second_kind_transform_check(SigmaParam sigma, double beta, std::span<const double> s_grid,
                                               const QuadratureSpec& spec)
{
    const WrightParams p(-sigma.value(), beta);
    const DecayingSeries w([p](double t) { return wright_eval(p, -t); });
    std::vector<ReportRow> rows(s_grid.size());
    parallel_for(s_grid.size(), [&](std::size_t i) {
        const double s = s_grid[i];
        const std::string params =
            param_tuple({{"sigma", sigma.value()}, {"beta", beta}, {"s", s}});
        try {
            const double lhs = laplace_forward([&](double t) { return w(t); }, s, spec, 0.0, w.cutoff()).value;
            const SeriesEval rhs = mittag_leffler(sigma.value(), beta + sigma.value(), -s);
            if (!rhs.converged) {
                throw ConvergenceError("second_kind_transform_check: image series did not converge");
            }
            rows[i] = compare_row("second_kind", params, lhs, rhs.value, 1e-6);
        } catch (const std::exception& e) {
            rows[i] = failure_row("second_kind", params, e.what());
        }
    });
    VerificationReport report;
    for (ReportRow& r : rows) {
        report.add(std::move(r));
    }
    return report;
}

}  // namespace wright
