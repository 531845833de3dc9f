#pragma once

// Finite-nu approximants built on the delta sequence nu J_nu(nu x): the
// terminating 2F1 approximants of W_{1,beta+1}(-t^2/4) and integrals against
// the kernel that tends to e^{-xi}, whose limits are Laplace transforms at s = 1.

#include <functional>
#include <string>
#include <vector>

#include "wright/bessel.hpp"
#include "wright/laplace.hpp"
#include "wright/quadrature.hpp"

namespace wright {

// nu >= 3 (DomainError otherwise).
class LambornOrder {
public:
    explicit LambornOrder(double nu);
    double value() const noexcept { return nu_; }
    bool is_odd_integer() const noexcept;

private:
    double nu_;
};

// 2F1((nu+1)/2, (1-nu)/2; beta+1; t^2/nu^2), a polynomial for odd integer nu.
// Requires 0 < t < nu, beta > -1 and nu an odd integer; DomainError otherwise.
double wright_limit_hyp(double t, double beta, LambornOrder nu, SummationOrder order = SummationOrder::Forward);

// wright_limit_hyp / Gamma(beta+1), which tends to W_{1,beta+1}(-t^2/4).
double wright_limit_approx(double t, double beta, LambornOrder nu);

// nu^{nu+1} / (sqrt(nu^2+xi^2) (xi + sqrt(nu^2+xi^2))^nu), evaluated in log
// space; equals 1 at xi = 0 and tends to e^{-xi} as nu grows. xi >= 0.
double lamborn_kernel(double xi, LambornOrder nu);

// Quadrature settings for the kernel integrals (1e-10 relative).
QuadratureSpec lamborn_spec();

// int_lower^inf f(xi) kernel(xi) dxi, integrated outward in panels of
// doubling width; ConvergenceError when the quadrature fails. f is taken as
// 0 on (0, lower).
double lamborn_limit(const Integrand& f, LambornOrder nu, const QuadratureSpec& spec = lamborn_spec(),
                     double lower = 0.0);

// As lamborn_limit for a series-valued f, with the weighted significance
// rule of laplace_forward_series.
double lamborn_limit_series(const SeriesFunction& f, LambornOrder nu, const QuadratureSpec& spec = lamborn_spec(),
                            double lower = 0.0);

// A finite-nu approximant and the value it tends to.
struct DeltaTarget {
    std::string name;
    std::string params;
    double target = 0.0;
    std::function<double(LambornOrder)> approx;
};

// Targets whose error must shrink from nu = 101 to nu = 401: J0 from the
// 2F1 route, and kernel integrals of W_{1,1}(+-x), W_{1,2}(+-x),
// W_{1,n}(-lambda^2 xi^2/4) for n = 1, 2, 3, and F_{1/3}(lambda/xi^{1/3}).
std::vector<DeltaTarget> delta_targets();

// Kernel integrals of W_{alpha,beta}(lambda xi) against E_{alpha,beta}(lambda)
// for (alpha, beta, lambda) in {(1,1,1), (1,1,-1), (1,2,1)}.
std::vector<DeltaTarget> mittag_leffler_chain();

}  // namespace wright
