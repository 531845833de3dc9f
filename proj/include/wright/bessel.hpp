#pragma once

// Real-order Bessel functions, order derivatives by quadrature and the
// hypergeometric series 0F1, 1F1, 2F1.

#include "wright/quadrature.hpp"

namespace wright {

inline constexpr double kMaxBesselOrder = 200.0;

// Orders may be negative; all require t > 0 and |nu| <= kMaxBesselOrder.
double bessel_j(double nu, double t);
double bessel_y(double nu, double t);
double bessel_i(double nu, double t);
double bessel_k(double nu, double t);

// Default settings for the order-derivative integrals.
QuadratureSpec order_derivative_spec();

// dJ_nu/dnu at nu = beta (> 0) from
//   pi beta int_0^{pi/2} tan(th) Y0(t sin^2 th) J_beta(t cos^2 th) dth.
QuadResult bessel_j_order_derivative_quadrature(double beta, double t,
                                                const QuadratureSpec& spec = order_derivative_spec());
// dI_nu/dnu at nu = beta (> 0) from
//   -2 beta int_0^{pi/2} tan(th) K0(t sin^2 th) I_beta(t cos^2 th) dth.
QuadResult bessel_i_order_derivative_quadrature(double beta, double t,
                                                const QuadratureSpec& spec = order_derivative_spec());

double hyp0f1(double b, double z);
double hyp1f1(double a, double b, double z);

enum class SummationOrder { Forward, Reverse };

// Gauss series. Terminating when a or b is a non-positive integer (any z);
// otherwise requires |z| < 1.
double hyp2f1(double a, double b, double c, double z, SummationOrder order = SummationOrder::Forward);

}  // namespace wright
