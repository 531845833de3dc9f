#pragma once

// Series evaluation of the Wright function (both kinds), the two-parameter
// Mittag-Leffler function and the Mainardi functions F_sigma, M_sigma.

#include <functional>

#include "wright/series.hpp"

namespace wright {

enum class WrightKind { First, Second };

// (alpha, beta) with alpha > -1 and beta >= 0.
class WrightParams {
public:
    WrightParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    WrightKind kind() const noexcept { return alpha_ >= 0.0 ? WrightKind::First : WrightKind::Second; }

private:
    double alpha_;
    double beta_;
};

// sigma in the open interval (0, 1).
class SigmaParam {
public:
    explicit SigmaParam(double sigma);
    double value() const noexcept { return sigma_; }

private:
    double sigma_;
};

// W_{alpha,beta}(t) = sum t^k / (k! Gamma(alpha k + beta)).
// Throws DomainError when |t| is beyond the overflow-safe range for alpha.
SeriesEval wright_eval(const WrightParams& p, double t, const SeriesTolerance& tol = {});

// E_{alpha,beta}(z) = sum z^k / Gamma(alpha k + beta), alpha > 0.
SeriesEval mittag_leffler(double alpha, double beta, double z, const SeriesTolerance& tol = {});

// M_sigma(t) = W_{-sigma,1-sigma}(-t), summed in the reflection form
// (1/pi) sum_{k>=1} (-t)^(k-1)/(k-1)! Gamma(sigma k) sin(pi sigma k).
SeriesEval mainardi_m(SigmaParam s, double t, const SeriesTolerance& tol = {});
// F_sigma(t) = W_{-sigma,0}(-t) = -(1/pi) sum_{k>=1} (-t)^k/k! Gamma(sigma k + 1) sin(pi sigma k).
SeriesEval mainardi_f(SigmaParam s, double t, const SeriesTolerance& tol = {});

// The same two functions summed with reciprocal gammas, sum (-t)^k/(k! Gamma(.)),
// kept as an independent cross-check of the reflection form.
SeriesEval mainardi_m_rgamma_form(SigmaParam s, double t, const SeriesTolerance& tol = {});
SeriesEval mainardi_f_rgamma_form(SigmaParam s, double t, const SeriesTolerance& tol = {});

// A series-defined function of z >= 0 that is known to decay as z grows.
// Past the first grid point where the series no longer resolves its value
// (no convergence, or the value sits within 1e4 rounding noise floors) the
// function is taken as 0. value_at_cutoff() bounds what is being discarded.
class DecayingSeries {
public:
    explicit DecayingSeries(std::function<SeriesEval(double)> f, double step = 0.125,
                            double max_arg = 200.0);

    double operator()(double z) const;
    double cutoff() const noexcept { return cutoff_; }
    double value_at_cutoff() const noexcept { return value_at_cutoff_; }

private:
    std::function<SeriesEval(double)> f_;
    double cutoff_;
    double value_at_cutoff_;
};

}  // namespace wright
