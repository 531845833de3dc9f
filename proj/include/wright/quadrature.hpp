#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals and a panel
// scheme for [a, inf).

#include <functional>
#include <span>

namespace wright {

using Integrand = std::function<double(double)>;

enum class EndpointBehavior {
    Regular,
    // f(t) ~ t^(-1/2) at the lower limit; integrated in u = sqrt(t - a).
    InverseSqrt,
};

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    EndpointBehavior endpoint = EndpointBehavior::Regular;
    // Semi-infinite truncation: panels of doubling width starting at
    // first_panel. The integral is cut once quiet_panels successive panels
    // each contribute less than a tenth of the tolerance, which bounds the
    // discarded tail by abs_tol/10 when the integrand decays at least
    // geometrically across panels. Reaching max_extent is a tail-bound failure.
    double first_panel = 1.0;
    int quiet_panels = 2;
    double max_extent = 1e6;
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    int subdivisions = 0;
    bool converged = false;
};

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// Integrates over consecutive breakpoints, refining globally across all pieces.
QuadResult integrate(const Integrand& f, std::span<const double> breakpoints,
                     const QuadratureSpec& spec = {});

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec = {});

}  // namespace wright
