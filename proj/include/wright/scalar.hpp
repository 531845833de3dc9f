#pragma once

// Real scalar special functions used as series coefficients and as closed-form
// oracles. Non-finite inputs are rejected with DomainError.

namespace wright {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

bool is_nonpositive_integer(double x) noexcept;

// sin(pi x), cos(pi x) with exact zeros at integers / half-integers.
double sinpi(double x);
double cospi(double x);

// Gamma(x). Throws DomainError at poles, OverflowError beyond double range.
double gamma(double x);
// ln|Gamma(x)|; *sign (optional) receives the sign of Gamma(x).
double lgamma(double x, int* sign = nullptr);

// 1/Gamma(x), exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);
// First and second derivatives of 1/Gamma, finite limits at the poles.
double rgamma_d1(double x);
double rgamma_d2(double x);

double digamma(double x);
double trigamma(double x);

// gamma(a, z) = int_0^z u^(a-1) e^-u du, a > 0, z >= 0.
double lower_incomplete_gamma(double a, double z);
// gamma(a, z) / Gamma(a).
double regularized_lower_gamma(double a, double z);

double erf(double x);
double erfc(double x);
// Exponential integral Ei(x), x != 0.
double ei(double x);
// Sine and cosine integrals; ci requires x > 0.
double si(double x);
double ci(double x);

}  // namespace wright
