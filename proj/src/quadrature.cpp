#include "wright/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wright/errors.hpp"

namespace wright {

namespace {

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

double checked_eval(const Integrand& f, double x)
{
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw ConvergenceError("quadrature: non-finite integrand at x = " + std::to_string(x));
    }
    return v;
}

// One 15-point Kronrod panel with the QUADPACK error estimate.
Segment gk15(const Integrand& f, double a, double b, int& evals)
{
    const auto& xk = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
    const auto& wk = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<double, 15> fv{};
    fv[0] = checked_eval(f, c);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        fv[2 * i - 1] = checked_eval(f, c - h * xk[i]);
        fv[2 * i] = checked_eval(f, c + h * xk[i]);
    }
    evals += 15;

    double rk = wk[0] * fv[0];
    double rg = wg[0] * fv[0];
    double rabs = wk[0] * std::fabs(fv[0]);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double pair = fv[2 * i - 1] + fv[2 * i];
        rk += wk[i] * pair;
        rabs += wk[i] * (std::fabs(fv[2 * i - 1]) + std::fabs(fv[2 * i]));
        if (i % 2 == 0) {
            rg += wg[i / 2] * pair;
        }
    }
    const double mean = 0.5 * rk;
    double rasc = wk[0] * std::fabs(fv[0] - mean);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        rasc += wk[i] * (std::fabs(fv[2 * i - 1] - mean) + std::fabs(fv[2 * i] - mean));
    }

    const double value = rk * h;
    double err = std::fabs((rk - rg) * h);
    rasc *= std::fabs(h);
    rabs *= std::fabs(h);
    if (rasc != 0.0 && err != 0.0) {
        err = rasc * std::min(1.0, std::pow(200.0 * err / rasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (rabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * rabs, err);
    }
    return {a, b, value, err};
}

QuadResult adaptive(const Integrand& f, std::span<const double> pts, const QuadratureSpec& spec)
{
    if (spec.abs_tol <= 0.0 || spec.rel_tol <= 0.0) {
        throw DomainError("quadrature: tolerances must be positive");
    }
    QuadResult res;
    std::priority_queue<Segment> queue;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] > pts[i]) {
            queue.push(gk15(f, pts[i], pts[i + 1], res.evaluations));
        }
    }
    auto totals = [&queue] {
        // Recomputed from scratch to avoid drift from incremental updates.
        auto copy = queue;
        double v = 0.0;
        double e = 0.0;
        while (!copy.empty()) {
            v += copy.top().value;
            e += copy.top().error;
            copy.pop();
        }
        return std::pair{v, e};
    };
    double value = 0.0;
    double error = 0.0;
    for (auto s = queue; !s.empty(); s.pop()) {
        value += s.top().value;
        error += s.top().error;
    }
    while (!queue.empty()) {
        if (error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) {
            res.converged = true;
            break;
        }
        if (res.subdivisions >= spec.max_subdivisions) {
            break;
        }
        const Segment worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            break;  // interval exhausted at machine resolution
        }
        queue.pop();
        const Segment left = gk15(f, worst.a, mid, res.evaluations);
        const Segment right = gk15(f, mid, worst.b, res.evaluations);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++res.subdivisions;
        if (res.subdivisions % 64 == 0) {
            std::tie(value, error) = totals();
        }
    }
    std::tie(value, error) = totals();
    if (!res.converged) {
        res.converged = error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    }
    res.value = value;
    res.abs_error = error;
    return res;
}

}  // namespace

QuadResult integrate(const Integrand& f, std::span<const double> breakpoints, const QuadratureSpec& spec)
{
    if (breakpoints.size() < 2) {
        throw DomainError("quadrature: need at least two breakpoints");
    }
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
        throw DomainError("quadrature: breakpoints must be ascending");
    }
    if (spec.endpoint == EndpointBehavior::InverseSqrt) {
        const double a = breakpoints.front();
        std::vector<double> u(breakpoints.size());
        std::transform(breakpoints.begin(), breakpoints.end(), u.begin(),
                       [a](double x) { return std::sqrt(x - a); });
        auto g = [&f, a](double v) { return v == 0.0 ? 0.0 : 2.0 * v * f(a + v * v); };
        return adaptive(g, u, spec);
    }
    return adaptive(f, breakpoints, spec);
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    if (!(a <= b)) {
        throw DomainError("quadrature: requires a <= b");
    }
    const std::array<double, 2> pts{a, b};
    return integrate(f, pts, spec);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec)
{
    if (spec.first_panel <= 0.0 || spec.quiet_panels < 1) {
        throw DomainError("quadrature: invalid truncation settings");
    }
    QuadResult total;
    total.converged = true;
    double lo = a;
    double width = spec.first_panel;
    int quiet = 0;
    bool first = true;
    QuadratureSpec panel_spec = spec;
    panel_spec.abs_tol = spec.abs_tol / 4.0;
    while (true) {
        const double hi = lo + width;
        QuadratureSpec s = panel_spec;
        if (!first) {
            s.endpoint = EndpointBehavior::Regular;
        }
        const QuadResult p = integrate(f, lo, hi, s);
        first = false;
        total.value += p.value;
        total.abs_error += p.abs_error;
        total.evaluations += p.evaluations;
        total.subdivisions += p.subdivisions;
        total.converged = total.converged && p.converged;
        const double negligible = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total.value)) / 10.0;
        const bool seen_mass = total.value != 0.0 || hi - a >= 64.0 * spec.first_panel;
        if (seen_mass && std::fabs(p.value) <= negligible) {
            ++quiet;
        } else {
            quiet = 0;
        }
        if (quiet >= spec.quiet_panels) {
            break;
        }
        lo = hi;
        width *= 2.0;
        if (lo - a > spec.max_extent) {
            total.converged = false;
            break;
        }
    }
    return total;
}

}  // namespace wright
