#pragma once

// Forward Laplace transforms by semi-infinite quadrature, explicit values of
// E_{1,beta+1} through the incomplete gamma function, and the transform check
// for the Wright function of the second kind.

#include <functional>
#include <limits>
#include <span>

#include "wright/quadrature.hpp"
#include "wright/report.hpp"
#include "wright/series.hpp"
#include "wright/wright.hpp"

namespace wright {

// Tolerances used for transforms checked at 1e-6: the quadrature error stays
// three orders below that.
QuadratureSpec laplace_spec();

struct LaplaceResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

// int_lower^upper e^{-s t} f(t) dt, i.e. the transform of an f that vanishes
// outside [lower, upper]. s > 0. DomainError for s <= 0 or a bad interval;
// ConvergenceError when the tail bound or the subdivision limit is not met.
LaplaceResult laplace_forward(const Integrand& f, double s, const QuadratureSpec& spec = laplace_spec(),
                              double lower = 0.0, double upper = std::numeric_limits<double>::infinity());

using SeriesFunction = std::function<SeriesEval(double)>;

// As laplace_forward for a series-valued f. A sample the series could not
// resolve is accepted only when its weighted size e^{-s t}(|value| + noise)
// is below 1e-3 abs_tol, and then counts as 0; otherwise ConvergenceError.
LaplaceResult laplace_forward_series(const SeriesFunction& f, double s,
                                     const QuadratureSpec& spec = laplace_spec(), double lower = 0.0,
                                     double upper = std::numeric_limits<double>::infinity());

// E_{1,beta+1}(z) = e^z P(beta, z)/z^beta for z > 0, with P the regularised
// lower incomplete gamma; 1F1(1; beta+1; z)/Gamma(beta+1) for z < 0;
// 1/Gamma(beta+1) at z = 0. DomainError for beta <= 0, OverflowError when
// e^z/z^beta overflows.
double ml_explicit(double beta, double z);

// Transform of t -> W_{-sigma,beta}(-t) against E_{sigma,beta+sigma}(-s) at
// each s of the grid, rel 1e-6. Failed points appear as failure rows.
VerificationReport second_kind_transform_check(SigmaParam sigma, double beta, std::span<const double> s_grid,
                                               const QuadratureSpec& spec = laplace_spec());

}  // namespace wright
