#pragma once

// Derivatives of the Wright and Mittag-Leffler functions with respect to
// their parameters, sigma-derivatives of the Mainardi functions, and the
// Bessel closed forms of dW/dbeta at alpha = 1.

#include "wright/series.hpp"
#include "wright/wright.hpp"

namespace wright {

// First kind only (alpha >= 0); DomainError otherwise.
// dW/dalpha = sum_{k>=1} t^k/(k-1)! (1/Gamma)'(alpha k + beta)
SeriesEval dW_dalpha(const WrightParams& p, double t, const SeriesTolerance& tol = {});
// dW/dbeta = sum_{k>=0} t^k/k! (1/Gamma)'(alpha k + beta)
SeriesEval dW_dbeta(const WrightParams& p, double t, const SeriesTolerance& tol = {});
// Second derivatives, with (1/Gamma)'' = (psi^2 - psi')/Gamma and the
// extra k^2 for alpha.
SeriesEval d2W_dalpha2(const WrightParams& p, double t, const SeriesTolerance& tol = {});
SeriesEval d2W_dbeta2(const WrightParams& p, double t, const SeriesTolerance& tol = {});

// Derivatives of E_{alpha,beta}(t), alpha > 0.
SeriesEval dE_dalpha(double alpha, double beta, double t, const SeriesTolerance& tol = {});
SeriesEval dE_dbeta(double alpha, double beta, double t, const SeriesTolerance& tol = {});

// sigma-derivatives of the Mainardi functions, t >= 0. Both F-derivatives
// vanish at t = 0 because F_sigma(0) = 0 for every sigma.
SeriesEval dF_dsigma(SigmaParam s, double t, const SeriesTolerance& tol = {});
SeriesEval dM_dsigma(SigmaParam s, double t, const SeriesTolerance& tol = {});
SeriesEval d2F_dsigma2(SigmaParam s, double t, const SeriesTolerance& tol = {});
SeriesEval d2M_dsigma2(SigmaParam s, double t, const SeriesTolerance& tol = {});

// Sign of the argument of W_{1,beta+1}(-+ t^2/4): Minus gives the J family,
// Plus the I family.
enum class BesselSign { Minus, Plus };

// d/dbeta W_{1,beta+1}(-+ t^2/4) = (2/t)^beta [ln(2/t) C_beta(t) + dC_beta/dbeta]
// with C = J for Minus and C = I for Plus. beta in {0, 1/2, 1} uses
// elementary closed forms; any other beta > 0 uses the order-derivative
// quadrature. DomainError for t <= 0 or beta < 0; ConvergenceError when the
// quadrature does not settle.
double closed_form_dWbeta_bessel(double beta, double t, BesselSign sign);

}  // namespace wright
