#pragma once

// Verification suites. Each check family returns report rows; the named
// suites (identities, laplace, limits, all) bundle them with the verdict
// rows that decide between competing closed-form readings.

#include <span>
#include <string>
#include <vector>

#include "wright/pairs.hpp"
#include "wright/report.hpp"

namespace wright {

// W_{1,beta+1}(-+t^2/4)(t/2)^beta against J_beta(t) and I_beta(t) for
// beta in {0, 0.5, 1, 2}, t = 0.5..10: rel 1e-10, or abs 1e-12 where
// |J_beta(t)| < 1e-8.
VerificationReport bessel_reduction_checks();

// E_{1,1}, E_{1,2}, E_{1,3/2} closed forms and ml_explicit on
// beta in {0.5, 1, 1.5, 2, 2.5, 3} against the defining series, rel 1e-10.
VerificationReport explicit_mittag_leffler_checks();

// Derivative series against central differences: first derivatives with
// step 1e-4 at rel 1e-6, second derivatives with step 1e-3 at rel 1e-4.
VerificationReport finite_difference_checks();

// dW/dbeta at (1, 1) against -(1/2) ln t I0(2 sqrt t) - K0(2 sqrt t),
// within 1e-9 max(1, |value|).
VerificationReport harmonic_bessel_checks();

// Explicit order-derivative closed forms (beta = 0, 1/2, 1) against the
// dW/dbeta series at rel 1e-8, and the quadrature form against the explicit
// forms at rel 1e-7.
VerificationReport order_derivative_checks();

// F = sigma t M (rel 1e-11), the sigma-derivative identities (rel 1e-8) and
// M_{1/2}(t) = e^{-t^2/4}/sqrt(pi) (rel 1e-11).
VerificationReport mainardi_structure_checks();

// Every pair of the manifest, including the second-kind sections.
VerificationReport laplace_pair_checks(const std::string& manifest = default_pairs_manifest());

// Delta targets: error at nu = 401 within 1% of the target and below the
// error at nu = 101. Chain targets: within 1% at nu = 401.
VerificationReport delta_limit_checks();

// Shape of the alpha-sweeps of dW/dalpha and dW/dbeta at beta = 1,
// t in {0.5, 1, 1.5, 1.75, 2}: one interior minimum, located in (0, 1),
// depth growing with t, |min dW/dbeta| <= |min dW/dalpha| and
// |curve(5)| <= 0.05 |min|.
VerificationReport morphology_checks();

// A candidate value for a quantity with more than one printed reading.
struct Reading {
    std::string name;
    double value = 0.0;
};

inline constexpr double kAdjudicationTol = 1e-6;

// Row "adjudication/<id>" whose params list every reading, the reference and
// verdict=<names of the readings within kAdjudicationTol relative>, or
// verdict=inconclusive. lhs is the closest reading, rhs the reference; the
// row passes iff the verdict is not inconclusive.
ReportRow adjudication_row(const std::string& id, std::string params, std::span<const Reading> readings,
                           double reference);

VerificationReport identity_adjudications();
VerificationReport laplace_adjudications();
VerificationReport limit_adjudications();

VerificationReport identities_suite();
VerificationReport laplace_suite(const std::string& manifest = default_pairs_manifest());
VerificationReport limits_suite();

// identities, laplace, limits, all.
const std::vector<std::string>& suite_names();

// DomainError for an unknown name.
VerificationReport run_suite(const std::string& name);

}  // namespace wright
