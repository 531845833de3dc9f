#include "wright/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "wright/bessel.hpp"
#include "wright/delta_limits.hpp"
#include "wright/errors.hpp"
#include "wright/laplace.hpp"
#include "wright/param_deriv.hpp"
#include "wright/scalar.hpp"
#include "wright/sweep.hpp"
#include "wright/wright.hpp"

namespace wright {

namespace {

using Scalar = std::function<double(double)>;

double converged_value(const SeriesEval& r, const std::string& what)
{
    if (!r.converged) {
        throw ConvergenceError(what + ": series did not converge");
    }
    return r.value;
}

double central_first(const Scalar& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double central_second(const Scalar& f, double x, double h)
{
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Fourth-order stencils for the verdict references.
double stencil_first(const Scalar& f, double x, double h)
{
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double stencil_second(const Scalar& f, double x, double h)
{
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

double stencil_forward_first(const Scalar& f, double x, double h)
{
    return (-25 * f(x) + 48 * f(x + h) - 36 * f(x + 2 * h) + 16 * f(x + 3 * h) - 3 * f(x + 4 * h)) / (12 * h);
}

ReportRow decided_row(std::string name, std::string params, double lhs, double rhs, bool pass)
{
    ReportRow row = compare_row(std::move(name), std::move(params), lhs, rhs, 0.0);
    row.pass = pass;
    return row;
}

// Evaluates one row, turning any failure into a failure row.
void add_guarded(VerificationReport& report, const std::string& name, const std::string& params,
                 const std::function<ReportRow()>& make)
{
    try {
        report.add(make());
    } catch (const std::exception& e) {
        report.add(failure_row(name, params, e.what()));
    }
}

double wright_value(double alpha, double beta, double t)
{
    return converged_value(wright_eval(WrightParams(alpha, beta), t), "wright");
}

double ml_series(double alpha, double beta, double z)
{
    return converged_value(mittag_leffler(alpha, beta, z), "mittag_leffler");
}

// gamma(a, z) read off the series of E_{1,a+1}(z).
double lower_gamma_from_series(double a, double z)
{
    return ml_series(1.0, a + 1.0, z) * std::pow(z, a) * gamma(a) * std::exp(-z);
}

// (4 A(2 nu) - A(nu)) / 3 for an approximant with error O(1/nu^2).
double richardson_limit(const SeriesFunction& f, double nu)
{
    const double a = lamborn_limit_series(f, LambornOrder(nu));
    const double b = lamborn_limit_series(f, LambornOrder(2.0 * nu));
    return (4.0 * b - a) / 3.0;
}

void add_adjudication(VerificationReport& report, const std::string& id, const std::string& params,
                      const std::function<ReportRow()>& make)
{
    add_guarded(report, "adjudication/" + id, params, make);
}

}  // namespace

VerificationReport bessel_reduction_checks()
{
    VerificationReport report;
    for (const double beta : {0.0, 0.5, 1.0, 2.0}) {
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.5 * i;
            const std::string params = param_tuple({{"beta", beta}, {"t", t}});
            add_guarded(report, "bessel_reduction/j", params, [&] {
                const double lhs = wright_value(1.0, beta + 1.0, -t * t / 4.0) * std::pow(t / 2.0, beta);
                const double j = bessel_j(beta, t);
                return std::fabs(j) < 1e-8 ? compare_row("bessel_reduction/j", params, lhs, j, 0.0, 1e-12)
                                           : compare_row("bessel_reduction/j", params, lhs, j, 1e-10);
            });
            add_guarded(report, "bessel_reduction/i", params, [&] {
                const double lhs = wright_value(1.0, beta + 1.0, t * t / 4.0) * std::pow(t / 2.0, beta);
                return compare_row("bessel_reduction/i", params, lhs, bessel_i(beta, t), 1e-10);
            });
        }
    }
    return report;
}

VerificationReport explicit_mittag_leffler_checks()
{
    VerificationReport report;
    const std::array<double, 7> zs = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0};
    for (const double z : zs) {
        const std::string params = param_tuple({{"z", z}});
        add_guarded(report, "explicit_ml/e11_exp", params, [&] {
            return compare_row("explicit_ml/e11_exp", params, std::exp(z), ml_series(1.0, 1.0, z), 1e-10);
        });
        add_guarded(report, "explicit_ml/e12_closed", params, [&] {
            return compare_row("explicit_ml/e12_closed", params, std::expm1(z) / z, ml_series(1.0, 2.0, z), 1e-10);
        });
        if (z > 0.0) {
            add_guarded(report, "explicit_ml/e32_erf", params, [&] {
                const double lhs = std::exp(z) * erf(std::sqrt(z)) / std::sqrt(z);
                return compare_row("explicit_ml/e32_erf", params, lhs, ml_series(1.0, 1.5, z), 1e-10);
            });
        }
        for (const double beta : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
            const std::string bp = param_tuple({{"beta", beta}, {"z", z}});
            add_guarded(report, "explicit_ml/incomplete_gamma", bp, [&] {
                return compare_row("explicit_ml/incomplete_gamma", bp, ml_explicit(beta, z),
                                   ml_series(1.0, beta + 1.0, z), 1e-10);
            });
        }
    }
    return report;
}

VerificationReport finite_difference_checks()
{
    VerificationReport report;
    constexpr double h1 = 1e-4;
    constexpr double h2 = 1e-3;
    using FirstKind = std::function<SeriesEval(double, double, double)>;
    struct FirstKindOp {
        const char* name;
        FirstKind deriv;
        int order;  // 1 or 2
        bool in_alpha;
        bool mittag_leffler;
    };
    const std::array<FirstKindOp, 6> ops = {{
        {"fd/dW_dalpha", [](double a, double b, double t) { return dW_dalpha({a, b}, t); }, 1, true, false},
        {"fd/dW_dbeta", [](double a, double b, double t) { return dW_dbeta({a, b}, t); }, 1, false, false},
        {"fd/dE_dalpha", [](double a, double b, double t) { return dE_dalpha(a, b, t); }, 1, true, true},
        {"fd/dE_dbeta", [](double a, double b, double t) { return dE_dbeta(a, b, t); }, 1, false, true},
        {"fd/d2W_dalpha2", [](double a, double b, double t) { return d2W_dalpha2({a, b}, t); }, 2, true, false},
        {"fd/d2W_dbeta2", [](double a, double b, double t) { return d2W_dbeta2({a, b}, t); }, 2, false, false},
    }};
    for (const FirstKindOp& op : ops) {
        for (const double a : {0.5, 1.0, 2.0}) {
            for (const double b : {0.5, 1.0, 1.5}) {
                for (const double t : {0.5, 1.0, 2.0}) {
                    const std::string params = param_tuple({{"alpha", a}, {"beta", b}, {"t", t}});
                    add_guarded(report, op.name, params, [&] {
                        const Scalar f = [&](double x) {
                            const double aa = op.in_alpha ? x : a;
                            const double bb = op.in_alpha ? b : x;
                            return op.mittag_leffler ? ml_series(aa, bb, t) : wright_value(aa, bb, t);
                        };
                        const double x = op.in_alpha ? a : b;
                        const double fd = op.order == 1 ? central_first(f, x, h1) : central_second(f, x, h2);
                        const double v = converged_value(op.deriv(a, b, t), op.name);
                        return compare_row(op.name, params, v, fd, op.order == 1 ? 1e-6 : 1e-4);
                    });
                }
            }
        }
    }
    struct SigmaOp {
        const char* name;
        std::function<SeriesEval(SigmaParam, double)> deriv;
        int order;
        bool f_function;
    };
    const std::array<SigmaOp, 4> sops = {{
        {"fd/dF_dsigma", [](SigmaParam s, double t) { return dF_dsigma(s, t); }, 1, true},
        {"fd/dM_dsigma", [](SigmaParam s, double t) { return dM_dsigma(s, t); }, 1, false},
        {"fd/d2F_dsigma2", [](SigmaParam s, double t) { return d2F_dsigma2(s, t); }, 2, true},
        {"fd/d2M_dsigma2", [](SigmaParam s, double t) { return d2M_dsigma2(s, t); }, 2, false},
    }};
    for (const SigmaOp& op : sops) {
        for (const double s : {0.25, 0.5, 0.75}) {
            for (const double t : {0.5, 1.0, 2.0}) {
                const std::string params = param_tuple({{"sigma", s}, {"t", t}});
                add_guarded(report, op.name, params, [&] {
                    const Scalar f = [&](double x) {
                        const SigmaParam sp(x);
                        return converged_value(op.f_function ? mainardi_f(sp, t) : mainardi_m(sp, t), op.name);
                    };
                    const double fd = op.order == 1 ? central_first(f, s, h1) : central_second(f, s, h2);
                    const double v = converged_value(op.deriv(SigmaParam(s), t), op.name);
                    return compare_row(op.name, params, v, fd, op.order == 1 ? 1e-6 : 1e-4);
                });
            }
        }
    }
    return report;
}

VerificationReport harmonic_bessel_checks()
{
    VerificationReport report;
    for (const double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const std::string params = param_tuple({{"alpha", 1.0}, {"beta", 1.0}, {"t", t}});
        add_guarded(report, "harmonic_bessel", params, [&] {
            const double v = converged_value(dW_dbeta({1.0, 1.0}, t), "dW_dbeta");
            const double x = 2.0 * std::sqrt(t);
            const double closed = -0.5 * std::log(t) * bessel_i(0.0, x) - bessel_k(0.0, x);
            const double bound = 1e-9 * std::max(1.0, std::fabs(v));
            return decided_row("harmonic_bessel", params, v, closed, std::fabs(v - closed) <= bound);
        });
    }
    return report;
}

VerificationReport order_derivative_checks()
{
    VerificationReport report;
    for (const double beta : {0.0, 0.5, 1.0}) {
        for (const BesselSign sign : {BesselSign::Minus, BesselSign::Plus}) {
            const double ssign = sign == BesselSign::Minus ? -1.0 : 1.0;
            for (const double t : {0.5, 1.0, 2.0, 4.0}) {
                const std::string params = param_tuple({{"beta", beta}, {"sign", ssign}, {"t", t}});
                add_guarded(report, "order_derivative/closed_form", params, [&] {
                    const double series = converged_value(dW_dbeta({1.0, beta + 1.0}, ssign * t * t / 4.0), "dW_dbeta");
                    return compare_row("order_derivative/closed_form", params,
                                       closed_form_dWbeta_bessel(beta, t, sign), series, 1e-8);
                });
            }
        }
    }
    for (const double beta : {0.5, 1.0}) {
        for (const BesselSign sign : {BesselSign::Minus, BesselSign::Plus}) {
            const bool j = sign == BesselSign::Minus;
            for (const double t : {0.5, 1.0, 2.0, 4.0}) {
                const std::string params = param_tuple({{"beta", beta}, {"sign", j ? -1.0 : 1.0}, {"t", t}});
                add_guarded(report, "order_derivative/quadrature_form", params, [&] {
                    const QuadResult q =
                        j ? bessel_j_order_derivative_quadrature(beta, t) : bessel_i_order_derivative_quadrature(beta, t);
                    if (!q.converged) {
                        throw ConvergenceError("order-derivative quadrature did not converge");
                    }
                    const double bessel = j ? bessel_j(beta, t) : bessel_i(beta, t);
                    const double quad = std::pow(2.0 / t, beta) * (std::log(2.0 / t) * bessel + q.value);
                    return compare_row("order_derivative/quadrature_form", params, quad,
                                       closed_form_dWbeta_bessel(beta, t, sign), 1e-7);
                });
            }
        }
    }
    return report;
}

VerificationReport mainardi_structure_checks()
{
    VerificationReport report;
    for (const double s : {0.2, 1.0 / 3.0, 0.5, 0.8}) {
        const SigmaParam sp(s);
        for (const double t : {0.5, 1.0, 2.0}) {
            const std::string params = param_tuple({{"sigma", s}, {"t", t}});
            add_guarded(report, "mainardi/f_sigma_t_m", params, [&] {
                const double m = converged_value(mainardi_m(sp, t), "mainardi_m");
                return compare_row("mainardi/f_sigma_t_m", params, converged_value(mainardi_f(sp, t), "mainardi_f"),
                                   s * t * m, 1e-11);
            });
            add_guarded(report, "mainardi/first_sigma_derivative", params, [&] {
                const double m = converged_value(mainardi_m(sp, t), "mainardi_m");
                const double dm = converged_value(dM_dsigma(sp, t), "dM_dsigma");
                return compare_row("mainardi/first_sigma_derivative", params,
                                   converged_value(dF_dsigma(sp, t), "dF_dsigma"), t * m + s * t * dm, 1e-8);
            });
            add_guarded(report, "mainardi/second_sigma_derivative", params, [&] {
                const double dm = converged_value(dM_dsigma(sp, t), "dM_dsigma");
                const double d2m = converged_value(d2M_dsigma2(sp, t), "d2M_dsigma2");
                return compare_row("mainardi/second_sigma_derivative", params,
                                   converged_value(d2F_dsigma2(sp, t), "d2F_dsigma2"), 2.0 * t * dm + s * t * d2m,
                                   1e-8);
            });
        }
    }
    const SigmaParam half(0.5);
    for (int i = 0; i <= 16; ++i) {
        const double t = 0.25 * i;
        const std::string params = param_tuple({{"sigma", 0.5}, {"t", t}});
        add_guarded(report, "mainardi/half_gaussian", params, [&] {
            return compare_row("mainardi/half_gaussian", params, converged_value(mainardi_m(half, t), "mainardi_m"),
                               std::exp(-t * t / 4.0) / std::sqrt(kPi), 1e-11);
        });
    }
    return report;
}

VerificationReport laplace_pair_checks(const std::string& manifest)
{
    VerificationReport report;
    for (const TransformPair& pair : load_pairs(manifest)) {
        report.append(verify_pair(pair));
    }
    return report;
}

VerificationReport delta_limit_checks()
{
    VerificationReport report;
    for (const DeltaTarget& d : delta_targets()) {
        const std::string name = "delta/" + d.name;
        add_guarded(report, name, d.params, [&] {
            const double a101 = d.approx(LambornOrder(101.0));
            const double a401 = d.approx(LambornOrder(401.0));
            const double e101 = std::fabs(a101 - d.target);
            const double e401 = std::fabs(a401 - d.target);
            const std::string params = d.params + ";nu=401;approx_nu101=" + format_double(a101) +
                                       ";err_nu101=" + format_double(e101) + ";err_nu401=" + format_double(e401);
            return decided_row(name, params, a401, d.target, e401 <= 0.01 * std::fabs(d.target) && e401 < e101);
        });
    }
    for (const DeltaTarget& d : mittag_leffler_chain()) {
        const std::string name = "delta/" + d.name;
        add_guarded(report, name, d.params, [&] {
            return compare_row(name, d.params + ";nu=401", d.approx(LambornOrder(401.0)), d.target, 0.01);
        });
    }
    return report;
}

VerificationReport morphology_checks()
{
    VerificationReport report;
    const std::array<double, 5> ts = {0.5, 1.0, 1.5, 1.75, 2.0};
    const std::array<const char*, 2> targets = {"dW_dalpha", "dW_dbeta"};
    // Minimum value per target and t; NaN when the sweep failed.
    std::array<std::array<double, 5>, 2> minima{};
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const std::string target = targets[k];
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const double t = ts[j];
            minima[k][j] = std::numeric_limits<double>::quiet_NaN();
            const std::string params = param_tuple({{"beta", 1.0}, {"t", t}});
            const std::string base = "morphology/" + target + "/";
            std::vector<CurvePoint> curve;
            try {
                curve = run_sweep({target, {{"beta", 1.0}, {"t", t}}, "alpha", GridRange(0.0, 5.0, 0.05), ""});
                if (!std::all_of(curve.begin(), curve.end(), [](const CurvePoint& p) { return p.converged; })) {
                    throw ConvergenceError("sweep point did not converge");
                }
            } catch (const std::exception& e) {
                report.add(failure_row(base + "sweep", params, e.what()));
                continue;
            }
            // The open interval (0, 5]: drop alpha = 0.
            curve.erase(curve.begin());
            int changes = 0;
            int minima_count = 0;
            int last = 0;
            for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
                const double d = curve[i + 1].result - curve[i].result;
                const int sgn = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
                if (sgn != 0 && last != 0 && sgn != last) {
                    ++changes;
                    minima_count += last < 0 ? 1 : 0;
                }
                if (sgn != 0) {
                    last = sgn;
                }
            }
            report.add(decided_row(base + "single_minimum", params + ";gradient_sign_changes=" + std::to_string(changes),
                                   minima_count, 1.0, changes == 1 && minima_count == 1));
            const auto it = std::min_element(curve.begin(), curve.end(),
                                             [](const CurvePoint& a, const CurvePoint& b) { return a.result < b.result; });
            const bool interior = it != curve.begin() && it + 1 != curve.end();
            const double amin = it->sweep_value;
            const double vmin = it->result;
            minima[k][j] = vmin;
            report.add(decided_row(base + "minimum_in_unit_interval", params + ";min_value=" + format_double(vmin), amin,
                                   1.0, interior && amin > 0.0 && amin < 1.0));
            const double tail = std::fabs(curve.back().result);
            report.add(decided_row(base + "decay_at_alpha_5", params, tail, 0.05 * std::fabs(vmin),
                                   tail <= 0.05 * std::fabs(vmin)));
        }
        for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
            const std::string params = param_tuple({{"beta", 1.0}, {"t_low", ts[j]}, {"t_high", ts[j + 1]}});
            report.add(decided_row("morphology/" + target + "/depth_grows_with_t", params, minima[k][j + 1],
                                   minima[k][j], minima[k][j + 1] < minima[k][j]));
        }
    }
    for (std::size_t j = 0; j < ts.size(); ++j) {
        const std::string params = param_tuple({{"beta", 1.0}, {"t", ts[j]}});
        const double mb = std::fabs(minima[1][j]);
        const double ma = std::fabs(minima[0][j]);
        report.add(decided_row("morphology/beta_minimum_below_alpha_minimum", params, mb, ma, mb <= ma));
    }
    return report;
}

ReportRow adjudication_row(const std::string& id, std::string params, std::span<const Reading> readings,
                           double reference)
{
    std::string verdict;
    const Reading* best = nullptr;
    double best_err = std::numeric_limits<double>::infinity();
    const double scale = reference != 0.0 ? std::fabs(reference) : 1.0;
    for (const Reading& r : readings) {
        const double err = std::fabs(r.value - reference) / scale;
        params += (params.empty() ? "" : ";") + r.name + "=" + format_double(r.value);
        if (err <= kAdjudicationTol) {
            verdict += (verdict.empty() ? "" : "+") + r.name;
        }
        if (best == nullptr || err < best_err) {
            best = &r;
            best_err = err;
        }
    }
    params += ";reference=" + format_double(reference) + ";verdict=" + (verdict.empty() ? "inconclusive" : verdict);
    const double lhs = best != nullptr ? best->value : std::numeric_limits<double>::quiet_NaN();
    return decided_row("adjudication/" + id, std::move(params), lhs, reference, !verdict.empty());
}

VerificationReport identity_adjudications()
{
    VerificationReport report;

    // Coefficient of the second alpha-derivative; beta = 1.5 separates the
    // readings, which coincide at beta = 1.
    add_adjudication(report, "second_alpha_derivative_psi_argument", "alpha=1;beta=1.5;t=1", [] {
        const double a = 1.0, b = 1.5, t = 1.0;
        double printed = 0.0;
        double term = 1.0;  // t^k / k!
        for (int k = 1; k <= 60; ++k) {
            term *= t / k;
            const double x = a * k + b;
            const double psi1 = digamma(a * k + 1.0);
            printed += static_cast<double>(k) * k * term * (psi1 * psi1 - trigamma(x)) * rgamma(x);
        }
        const double derived = converged_value(d2W_dalpha2({a, b}, t), "d2W_dalpha2");
        const double ref = stencil_second([&](double x) { return wright_value(x, b, t); }, a, 1e-2);
        const std::array<Reading, 2> r = {{{"printed_psi_alpha_k_plus_1", printed}, {"psi_alpha_k_plus_beta", derived}}};
        return adjudication_row("second_alpha_derivative_psi_argument", "alpha=1;beta=1.5;t=1", r, ref);
    });

    const double t = 2.0;
    const double x = 2.0 * std::sqrt(t);
    const double st = std::sqrt(t);
    const double lt = std::log(t);
    const double i0 = bessel_i(0.0, x), i1 = bessel_i(1.0, x);
    const double k0 = bessel_k(0.0, x), k1 = bessel_k(1.0, x);

    add_adjudication(report, "alpha_derivative_closed_form_beta_0", "alpha=1;beta=0;t=2", [&] {
        const double ref = stencil_first([&](double a) { return wright_value(a, 0.0, t); }, 1.0, 1e-3);
        const std::array<Reading, 2> r = {{{"printed", t * i0}, {"derived", -t * (0.5 * lt * i0 + k0)}}};
        return adjudication_row("alpha_derivative_closed_form_beta_0", "alpha=1;beta=0;t=2", r, ref);
    });
    add_adjudication(report, "alpha_derivative_closed_form_beta_1", "alpha=1;beta=1;t=2", [&] {
        const double ref = stencil_first([&](double a) { return wright_value(a, 1.0, t); }, 1.0, 1e-3);
        const std::array<Reading, 2> r = {{{"printed", st * i1}, {"derived", -(0.5 * i0 + st / 2.0 * lt * i1 - st * k1)}}};
        return adjudication_row("alpha_derivative_closed_form_beta_1", "alpha=1;beta=1;t=2", r, ref);
    });
    add_adjudication(report, "beta_derivative_closed_form_beta_0", "alpha=1;beta=0;t=2", [&] {
        const double ref = stencil_forward_first([&](double b) { return wright_value(1.0, b, t); }, 0.0, 1e-3);
        const std::array<Reading, 2> r = {
            {{"printed", 0.5 * (t * i0 - st * i1 * lt) + st * k1}, {"derived", 0.5 * (i0 - st * lt * i1) + st * k1}}};
        return adjudication_row("beta_derivative_closed_form_beta_0", "alpha=1;beta=0;t=2", r, ref);
    });
    add_adjudication(report, "beta_derivative_closed_form_beta_1", "alpha=1;beta=1;t=2", [&] {
        const double ref = stencil_first([&](double b) { return wright_value(1.0, b, t); }, 1.0, 1e-3);
        const std::array<Reading, 2> r = {{{"printed", i0}, {"derived", -0.5 * lt * i0 - k0}}};
        return adjudication_row("beta_derivative_closed_form_beta_1", "alpha=1;beta=1;t=2", r, ref);
    });

    // Order derivative at beta = 1, J-line: sign of the J0/t term.
    add_adjudication(report, "order_derivative_j_sign", "beta=1;sign=-1;t=0.5", [] {
        const double tt = 0.5;
        const double base = -std::log(tt / 2.0) * bessel_j(1.0, tt) + kPi / 2.0 * bessel_y(1.0, tt);
        const double printed = 2.0 / tt * (base - bessel_j(0.0, tt) / tt);
        const double flipped = 2.0 / tt * (base + bessel_j(0.0, tt) / tt);
        const double ref = stencil_first([&](double b) { return wright_value(1.0, b + 1.0, -tt * tt / 4.0); }, 1.0, 1e-3);
        const std::array<Reading, 2> r = {{{"printed_minus_j0_over_t", printed}, {"plus_j0_over_t", flipped}}};
        return adjudication_row("order_derivative_j_sign", "beta=1;sign=-1;t=0.5", r, ref);
    });
    return report;
}

VerificationReport laplace_adjudications()
{
    VerificationReport report;
    const double z = 2.0;
    const double ez = std::exp(-z);
    const double sqpi = std::sqrt(kPi);
    const double erfz = erf(std::sqrt(z));

    add_adjudication(report, "lower_gamma_order_1", "a=1;z=2", [&] {
        const std::array<Reading, 2> r = {{{"printed", (1.0 - ez) / z}, {"recurrence", 1.0 - ez}}};
        return adjudication_row("lower_gamma_order_1", "a=1;z=2", r, lower_gamma_from_series(1.0, z));
    });
    add_adjudication(report, "lower_gamma_order_2", "a=2;z=2", [&] {
        const std::array<Reading, 2> r = {{{"printed", (1.0 - ez) / z - z * ez}, {"recurrence", 1.0 - ez - z * ez}}};
        return adjudication_row("lower_gamma_order_2", "a=2;z=2", r, lower_gamma_from_series(2.0, z));
    });
    add_adjudication(report, "lower_gamma_order_3", "a=3;z=2", [&] {
        const double g2 = 1.0 - ez - z * ez;
        const std::array<Reading, 2> r = {
            {{"printed", (1.0 - ez) / z - 2.0 * z * ez}, {"recurrence", 2.0 * g2 - z * z * ez}}};
        return adjudication_row("lower_gamma_order_3", "a=3;z=2", r, lower_gamma_from_series(3.0, z));
    });
    const double g32 = sqpi / 2.0 * erfz - std::sqrt(z) * ez;
    add_adjudication(report, "lower_gamma_order_3_2", "a=1.5;z=2", [&] {
        const std::array<Reading, 2> r = {{{"printed", sqpi * erfz - z * ez}, {"recurrence", g32}}};
        return adjudication_row("lower_gamma_order_3_2", "a=1.5;z=2", r, lower_gamma_from_series(1.5, z));
    });
    add_adjudication(report, "lower_gamma_order_5_2", "a=2.5;z=2", [&] {
        const std::array<Reading, 2> r = {
            {{"printed", 2.0 * (sqpi * erfz - z * ez) - z * z * ez}, {"recurrence", 1.5 * g32 - std::pow(z, 1.5) * ez}}};
        return adjudication_row("lower_gamma_order_5_2", "a=2.5;z=2", r, lower_gamma_from_series(2.5, z));
    });

    const double ep = std::exp(z);
    add_adjudication(report, "ml_half_integer_5_2", "alpha=1;beta=2.5;z=2", [&] {
        const double pre = ep / std::pow(z, 1.5);
        const std::array<Reading, 3> r = {{{"printed", pre * (sqpi * ep * erfz - z * ez)},
                                           {"inner_exp_removed", pre * (sqpi * erfz - z * ez)},
                                           {"derived", ml_explicit(1.5, z)}}};
        return adjudication_row("ml_half_integer_5_2", "alpha=1;beta=2.5;z=2", r, ml_series(1.0, 2.5, z));
    });
    add_adjudication(report, "ml_half_integer_7_2", "alpha=1;beta=3.5;z=2", [&] {
        const double pre = ep / std::pow(z, 2.5);
        const std::array<Reading, 3> r = {{{"printed", pre * (2.0 * (sqpi * ep * erfz - z * ez) - z * z * ez)},
                                           {"inner_exp_removed", pre * (2.0 * (sqpi * erfz - z * ez) - z * z * ez)},
                                           {"derived", ml_explicit(2.5, z)}}};
        return adjudication_row("ml_half_integer_7_2", "alpha=1;beta=3.5;z=2", r, ml_series(1.0, 3.5, z));
    });

    // t-multiplication rule; lambda = 2 separates the readings.
    const std::string tmul = "alpha=1;beta=1;lambda=2;s=4";
    add_adjudication(report, "t_multiplication_factor", tmul, [&] {
        const double a = 1.0, b = 1.0, lambda = 2.0, s = 4.0;
        const TransformPair pair{"tmul", "wright_tmul", "", {}, 1e-6, 1e-8};
        const ParamPoint point = {{"alpha", a}, {"beta", b}, {"lambda", lambda}, {"s", s}};
        const double quad = evaluate_pair_point(pair, point).lhs;
        const double e0 = ml_series(a, b, lambda / s);
        const double e1 = ml_series(a, b - 1.0, lambda / s);
        const double printed = ((a * lambda - b + 1.0) * e0 + e1) / (a * lambda * s * s);
        const double corrected = ((a - b + 1.0) * e0 + e1) / (a * s * s);
        const std::array<Reading, 2> r = {{{"printed", printed}, {"alpha_only", corrected}}};
        return adjudication_row("t_multiplication_factor", tmul, r, quad);
    });

    // Power of t in the K_{n-1/2} transform of F_{1/2}(lambda/sqrt t); the
    // readings are quadratures, the reference the Bessel-K side.
    const std::string kidx = "n=1;lambda=1;s=2";
    add_adjudication(report, "k_bessel_power_of_t", kidx, [&] {
        const double n = 1.0, lambda = 1.0, s = 2.0;
        const DecayingSeries g([](double y) { return mainardi_f(SigmaParam(0.5), y); });
        const double lower = std::pow(lambda / g.cutoff(), 2.0);
        const auto transform = [&](double power) {
            return laplace_forward([&](double tt) { return std::pow(tt, power) * g(lambda / std::sqrt(tt)); }, s,
                                   laplace_spec(), lower)
                .value;
        };
        const double ref = std::pow(lambda, n + 0.5) * std::pow(s, (1.0 - 2.0 * n) / 4.0) *
                           bessel_k(n - 0.5, lambda * std::sqrt(s)) / (std::pow(2.0, n - 0.5) * std::sqrt(kPi));
        const std::array<Reading, 2> r = {{{"printed_t_pow_n", transform(n)}, {"t_pow_n_minus_1", transform(n - 1.0)}}};
        return adjudication_row("k_bessel_power_of_t", kidx, r, ref);
    });
    return report;
}

VerificationReport limit_adjudications()
{
    VerificationReport report;
    const LambornOrder big(20001.0);

    add_adjudication(report, "hypergeometric_normalisation", "beta=0.5;t=1;nu=20001", [&] {
        const double raw = wright_limit_hyp(1.0, 0.5, big);
        const std::array<Reading, 2> r = {{{"raw_2f1", raw}, {"divided_by_gamma_beta_plus_1", raw * rgamma(1.5)}}};
        return adjudication_row("hypergeometric_normalisation", "beta=0.5;t=1;nu=20001", r,
                                wright_value(1.0, 1.5, -0.25));
    });
    add_adjudication(report, "sine_limit", "beta=0.5;t=1", [&] {
        const double t = 1.0;
        const std::string params = "beta=0.5;t=1;limit_nu20001=" + format_double(wright_limit_approx(t, 0.5, big));
        const std::array<Reading, 2> r = {
            {{"printed_2_sin_over_sqrt_pi_t", 2.0 * std::sin(t) / (std::sqrt(kPi) * t)},
             {"sin_over_sqrt_pi_t", std::sin(t) / (std::sqrt(kPi) * t)}}};
        return adjudication_row("sine_limit", params, r, wright_value(1.0, 1.5, -t * t / 4.0));
    });
    add_adjudication(report, "cosine_limit_sign", "beta=-0.5;t=1", [&] {
        const double t = 1.0;
        const std::string params = "beta=-0.5;t=1;limit_nu20001=" + format_double(wright_limit_approx(t, -0.5, big));
        const std::array<Reading, 2> r = {{{"printed_minus_cos", -std::cos(t) / std::sqrt(kPi)},
                                           {"plus_cos", std::cos(t) / std::sqrt(kPi)}}};
        return adjudication_row("cosine_limit_sign", params, r, wright_value(1.0, 0.5, -t * t / 4.0));
    });

    // Kernel limits, Richardson-extrapolated from nu = 401 and 802.
    add_adjudication(report, "incomplete_gamma_limit_exponential", "beta=1.5;lambda=1", [&] {
        const double beta = 1.5, lambda = 1.0;
        const double ref = richardson_limit(
            [&](double xi) { return wright_eval(WrightParams(1.0, beta + 1.0), lambda * xi); }, 401.0);
        const double g = lower_incomplete_gamma(beta, lambda) / (std::pow(lambda, beta) * gamma(beta));
        const std::array<Reading, 2> r = {{{"printed_exp_minus_lambda", std::exp(-lambda) * g},
                                           {"exp_plus_lambda", std::exp(lambda) * g}}};
        return adjudication_row("incomplete_gamma_limit_exponential", "beta=1.5;lambda=1", r, ref);
    });
    add_adjudication(report, "ml_1_2_negative_limit", "lambda=1", [&] {
        const double lambda = 1.0;
        const double ref =
            richardson_limit([&](double xi) { return wright_eval(WrightParams(1.0, 2.0), -lambda * xi); }, 401.0);
        const double sh = std::sinh(lambda / 2.0);
        const std::array<Reading, 2> r = {{{"printed_exp_minus_lambda", 2.0 / lambda * std::exp(-lambda) * sh},
                                           {"exp_minus_half_lambda", 2.0 / lambda * std::exp(-lambda / 2.0) * sh}}};
        return adjudication_row("ml_1_2_negative_limit", "lambda=1", r, ref);
    });
    return report;
}

VerificationReport identities_suite()
{
    VerificationReport report;
    report.append(bessel_reduction_checks());
    report.append(explicit_mittag_leffler_checks());
    report.append(harmonic_bessel_checks());
    report.append(order_derivative_checks());
    report.append(mainardi_structure_checks());
    report.append(identity_adjudications());
    return report;
}

VerificationReport laplace_suite(const std::string& manifest)
{
    VerificationReport report = laplace_pair_checks(manifest);
    report.append(laplace_adjudications());
    return report;
}

VerificationReport limits_suite()
{
    VerificationReport report = delta_limit_checks();
    report.append(limit_adjudications());
    return report;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"identities", "laplace", "limits", "all"};
    return names;
}

VerificationReport run_suite(const std::string& name)
{
    if (name == "identities") {
        return identities_suite();
    }
    if (name == "laplace") {
        return laplace_suite();
    }
    if (name == "limits") {
        return limits_suite();
    }
    if (name == "all") {
        VerificationReport report = identities_suite();
        report.append(laplace_suite());
        report.append(limits_suite());
        return report;
    }
    throw DomainError("unknown suite '" + name + "' (expected identities, laplace, limits or all)");
}

}  // namespace wright
