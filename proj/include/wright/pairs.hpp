#pragma once

// Catalog of Laplace transform pairs read from a manifest and checked by
// quadrature of the time side against the image side.
//
// Manifest sections look like
//
//   [pair]
//   name = shift_exp
//   kind = wright_shift
//   alpha = 1
//   beta = 1, 2
//   s = 1.5, 2
//
// Every key other than name, kind, variant, rel_tol and abs_tol is a
// parameter holding a comma-separated list; the grid is their Cartesian
// product, enumerated in key order. `variant` may also be a list; each entry
// becomes its own pair named <name>/<variant>.

#include <map>
#include <string>
#include <vector>

#include "wright/laplace.hpp"
#include "wright/manifest.hpp"
#include "wright/report.hpp"

namespace wright {

using ParamPoint = std::map<std::string, double>;

// Kinds and the parameters each one reads (all grid keys):
//   wright_laplace      alpha beta lambda sign s      W(sign lambda t)
//   wright_shift        alpha beta lambda rho sign s  e^{sign rho t} W(lambda t)
//   wright_hyperbolic   alpha beta lambda rho s       variant sinh | cosh
//   wright_tmul         alpha beta lambda s           t W(lambda t)
//   bessel_laplace      lambda s                      variant w11 | w12 | w13
//   mainardi_half       lambda s                      variant f_over_t | m_scaled | f | m_sqrt | w0 | w_half
//   mainardi_tn         lambda n s                    variant f | m | w
//   mainardi_third      lambda s                      variant f_over_t | m_scaled | f3 | bessel_k
//   mainardi_third_pointwise  lambda t                variant f3 | m | w0 | w23
//   second_kind         sigma beta s
struct TransformPair {
    std::string name;
    std::string kind;
    std::string variant;
    std::vector<ParamPoint> grid;
    double rel_tol = 1e-6;
    double abs_tol = 1e-8;
};

// ManifestError for an unknown kind or variant, or a bad grid.
std::vector<TransformPair> pairs_from_section(const ManifestSection& section);
std::vector<TransformPair> load_pairs(const std::string& path);

// Manifest shipped with the sources.
std::string default_pairs_manifest();

// Left side and right side of one grid point: lhs is the quadrature (or, for
// the pointwise kind, the Wright-side value), rhs the closed form.
struct PairValues {
    double lhs = 0.0;
    double rhs = 0.0;
};
PairValues evaluate_pair_point(const TransformPair& pair, const ParamPoint& point,
                               const QuadratureSpec& spec = laplace_spec());

// One row per grid point, in grid order; a point that fails to evaluate
// yields a failure row. Points are evaluated in parallel.
VerificationReport verify_pair(const TransformPair& pair, const QuadratureSpec& spec = laplace_spec());

}  // namespace wright
