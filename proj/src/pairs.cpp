#include "wright/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "wright/bessel.hpp"
#include "wright/errors.hpp"
#include "wright/parallel.hpp"
#include "wright/wright.hpp"

#ifndef WRIGHT_DATA_DIR
#define WRIGHT_DATA_DIR "data"
#endif

namespace wright {

namespace {

struct KindInfo {
    std::vector<std::string> params;
    std::vector<std::string> variants;  // empty: the kind takes no variant
};

const std::map<std::string, KindInfo>& kinds()
{
    static const std::map<std::string, KindInfo> table = {
        {"wright_laplace", {{"alpha", "beta", "lambda", "sign", "s"}, {}}},
        {"wright_shift", {{"alpha", "beta", "lambda", "rho", "sign", "s"}, {}}},
        {"wright_hyperbolic", {{"alpha", "beta", "lambda", "rho", "s"}, {"sinh", "cosh"}}},
        {"wright_tmul", {{"alpha", "beta", "lambda", "s"}, {}}},
        {"bessel_laplace", {{"lambda", "s"}, {"w11", "w12", "w13"}}},
        {"mainardi_half", {{"lambda", "s"}, {"f_over_t", "m_scaled", "f", "m_sqrt", "w0", "w_half"}}},
        {"mainardi_tn", {{"lambda", "n", "s"}, {"f", "m", "w"}}},
        {"mainardi_third", {{"lambda", "s"}, {"f_over_t", "m_scaled", "f3", "bessel_k"}}},
        {"mainardi_third_pointwise", {{"lambda", "t"}, {"f3", "m", "w0", "w23"}}},
        {"second_kind", {{"sigma", "beta", "s"}, {}}},
    };
    return table;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

[[noreturn]] void bad(const ManifestSection& sec, const std::string& what)
{
    throw ManifestError("manifest line " + std::to_string(sec.line()) + ": " + what);
}

void check_values(const ManifestSection& sec, const std::string& key, const std::vector<double>& values)
{
    for (double v : values) {
        const bool ok = [&] {
            if (key == "sign") {
                return v == 1.0 || v == -1.0;
            }
            if (key == "n") {
                return v >= 0.0 && v == std::floor(v) && v <= 20.0;
            }
            if (key == "rho") {
                return v > 0.0 && v <= 0.5;
            }
            if (key == "sigma") {
                return v > 0.0 && v < 1.0;
            }
            if (key == "alpha" || key == "beta") {
                return std::isfinite(v);
            }
            return v > 0.0 && std::isfinite(v);
        }();
        if (!ok) {
            bad(sec, "value " + format_double(v) + " is outside the domain of '" + key + "'");
        }
    }
}

SeriesEval converged(SeriesEval r, const char* what)
{
    if (!r.converged) {
        throw ConvergenceError(std::string(what) + ": series did not converge");
    }
    return r;
}

double ml(double a, double b, double z)
{
    return converged(mittag_leffler(a, b, z), "image side").value;
}

SeriesEval scaled(SeriesEval r, double c)
{
    r.value *= c;
    r.abs_sum *= std::fabs(c);
    return r;
}

double get(const ParamPoint& p, const char* key)
{
    return p.at(key);
}

// A decaying kernel g(z) taken at z = lambda / t^power: it vanishes below the
// time where z passes the series cutoff.
struct KernelInTime {
    DecayingSeries g;
    double lambda;
    double power;

    double z(double t) const { return lambda / std::pow(t, power); }
    double at(double t) const { return g(z(t)); }
    double lower() const
    {
        return std::isinf(g.cutoff()) ? 0.0 : std::pow(lambda / g.cutoff(), 1.0 / power);
    }
};

KernelInTime mainardi_kernel(double sigma, bool f_kind, double lambda)
{
    const SigmaParam sp(sigma);
    if (f_kind) {
        return {DecayingSeries([sp](double z) { return mainardi_f(sp, z); }), lambda, sigma};
    }
    return {DecayingSeries([sp](double z) { return mainardi_m(sp, z); }), lambda, sigma};
}

KernelInTime wright_kernel(double alpha, double beta, double lambda, double power)
{
    const WrightParams p(alpha, beta);
    return {DecayingSeries([p](double z) { return wright_eval(p, -z); }), lambda, power};
}

double transform(const KernelInTime& k, double s, const QuadratureSpec& spec, const Integrand& weight)
{
    return laplace_forward([&](double t) { return t == 0.0 ? 0.0 : weight(t) * k.at(t); }, s, spec, k.lower())
        .value;
}

PairValues wright_family(const TransformPair& pair, const ParamPoint& p, const QuadratureSpec& spec)
{
    const double a = get(p, "alpha");
    const double b = get(p, "beta");
    const double lambda = get(p, "lambda");
    const double s = get(p, "s");
    const WrightParams wp(a, b);
    const auto image = [&](double u) { return ml(a, b, lambda / u) / u; };

    if (pair.kind == "wright_laplace") {
        const double sign = get(p, "sign");
        const auto f = [&](double t) { return wright_eval(wp, sign * lambda * t); };
        return {laplace_forward_series(f, s, spec).value, ml(a, b, sign * lambda / s) / s};
    }
    if (pair.kind == "wright_shift") {
        const double rho = get(p, "rho");
        const double sign = get(p, "sign");
        const auto f = [&](double t) { return scaled(wright_eval(wp, lambda * t), std::exp(sign * rho * t)); };
        return {laplace_forward_series(f, s, spec).value, image(s - sign * rho)};
    }
    if (pair.kind == "wright_hyperbolic") {
        const double rho = get(p, "rho");
        const bool is_sinh = pair.variant == "sinh";
        const auto f = [&](double t) {
            const double h = is_sinh ? std::sinh(rho * t) : std::cosh(rho * t);
            return scaled(wright_eval(wp, lambda * t), h);
        };
        const double rhs = is_sinh ? 0.5 * (image(s - rho) - image(s + rho)) : 0.5 * (image(s - rho) + image(s + rho));
        return {laplace_forward_series(f, s, spec).value, rhs};
    }
    // wright_tmul
    const auto f = [&](double t) { return scaled(wright_eval(wp, lambda * t), t); };
    const double x = lambda / s;
    const double rhs = ((a - b + 1.0) * ml(a, b, x) + ml(a, b - 1.0, x)) / (a * s * s);
    return {laplace_forward_series(f, s, spec).value, rhs};
}

PairValues bessel_family(const TransformPair& pair, const ParamPoint& p, const QuadratureSpec& spec)
{
    const double lambda = get(p, "lambda");
    const double s = get(p, "s");
    const double r = std::hypot(s, lambda);
    const double q = lambda / (s + r);
    const double beta = pair.variant == "w11" ? 1.0 : (pair.variant == "w12" ? 2.0 : 3.0);
    const WrightParams wp(1.0, beta);
    const auto f = [&](double t) { return wright_eval(wp, -lambda * lambda * t * t / 4.0); };
    const double rhs = beta == 1.0 ? 1.0 / r : (beta == 2.0 ? 2.0 / (s + r) : (q + q * q * q / 3.0) / lambda);
    return {laplace_forward_series(f, s, spec).value, rhs};
}

PairValues mainardi_family(const TransformPair& pair, const ParamPoint& p, const QuadratureSpec& spec)
{
    using std::numbers::pi;
    const double lambda = get(p, "lambda");
    const double s = get(p, "s");
    const std::string& v = pair.variant;

    if (pair.kind == "mainardi_half") {
        const double decay = std::exp(-lambda * std::sqrt(s));
        const auto one = [](double) { return 1.0; };
        if (v == "f_over_t") {
            return {transform(mainardi_kernel(0.5, true, lambda), s, spec, [](double t) { return 1.0 / t; }), decay};
        }
        if (v == "m_scaled") {
            const auto w = [&](double t) { return lambda / (2.0 * t * std::sqrt(t)); };
            return {transform(mainardi_kernel(0.5, false, lambda), s, spec, w), decay};
        }
        const double half = lambda / (2.0 * std::sqrt(s)) * decay;
        if (v == "f") {
            return {transform(mainardi_kernel(0.5, true, lambda), s, spec, one), half};
        }
        if (v == "m_sqrt") {
            const auto w = [&](double t) { return lambda / (2.0 * std::sqrt(t)); };
            return {transform(mainardi_kernel(0.5, false, lambda), s, spec, w), half};
        }
        if (v == "w0") {
            const auto w = [](double) { return 2.0; };
            return {transform(wright_kernel(-0.5, 0.0, lambda, 0.5), s, spec, w), 2.0 * half};
        }
        // w_half
        const auto w = [&](double t) { return lambda / std::sqrt(t); };
        return {transform(wright_kernel(-0.5, 0.5, lambda, 0.5), s, spec, w), 2.0 * half};
    }

    if (pair.kind == "mainardi_tn") {
        const double n = get(p, "n");
        const double root_s = std::sqrt(s);
        const double norm = std::pow(2.0, n - 0.5) * std::sqrt(pi);
        if (v == "w") {
            const double rhs =
                std::pow(lambda, n + 1.5) * std::pow(s, -(2.0 * n + 1.0) / 4.0) * bessel_k(n + 0.5, lambda * root_s) / norm;
            const auto w = [&](double t) { return 2.0 * std::pow(t, n); };
            return {transform(wright_kernel(-0.5, 0.0, lambda, 0.5), s, spec, w), rhs};
        }
        const double rhs =
            std::pow(lambda, n + 0.5) * std::pow(s, (1.0 - 2.0 * n) / 4.0) * bessel_k(n - 0.5, lambda * root_s) / norm;
        if (v == "f") {
            const auto w = [&](double t) { return std::pow(t, n - 1.0); };
            return {transform(mainardi_kernel(0.5, true, lambda), s, spec, w), rhs};
        }
        const auto w = [&](double t) { return std::pow(t, n - 1.0) * lambda / (2.0 * std::sqrt(t)); };
        return {transform(mainardi_kernel(0.5, false, lambda), s, spec, w), rhs};
    }

    // mainardi_third
    const double cbrt_s = std::cbrt(s);
    const double decay = std::exp(-lambda * cbrt_s);
    const double scaled_decay = lambda * decay / (cbrt_s * cbrt_s);
    if (v == "f_over_t") {
        return {transform(mainardi_kernel(1.0 / 3.0, true, lambda), s, spec, [](double t) { return 1.0 / t; }), decay};
    }
    if (v == "m_scaled") {
        const auto w = [&](double t) { return lambda / (3.0 * t * std::cbrt(t)); };
        return {transform(mainardi_kernel(1.0 / 3.0, false, lambda), s, spec, w), decay};
    }
    if (v == "f3") {
        return {transform(mainardi_kernel(1.0 / 3.0, true, lambda), s, spec, [](double) { return 3.0; }),
                scaled_decay};
    }
    // bessel_k
    const double l32 = lambda * std::sqrt(lambda);
    const auto f = [&](double t) {
        if (t == 0.0) {
            return 0.0;
        }
        return l32 / (pi * std::sqrt(t)) * bessel_k(1.0 / 3.0, 2.0 * l32 / std::sqrt(27.0 * t));
    };
    return {laplace_forward(f, s, spec).value, scaled_decay};
}

PairValues third_pointwise(const TransformPair& pair, const ParamPoint& p)
{
    using std::numbers::pi;
    const double lambda = get(p, "lambda");
    const double t = get(p, "t");
    const double z = lambda / std::cbrt(t);
    const double l32 = lambda * std::sqrt(lambda);
    const double rhs = l32 / (pi * std::sqrt(t)) * bessel_k(1.0 / 3.0, 2.0 * l32 / std::sqrt(27.0 * t));
    const SigmaParam third(1.0 / 3.0);
    const std::string& v = pair.variant;
    double lhs = 0.0;
    if (v == "f3") {
        lhs = 3.0 * converged(mainardi_f(third, z), "F_1/3").value;
    } else if (v == "m") {
        lhs = z * converged(mainardi_m(third, z), "M_1/3").value;
    } else if (v == "w0") {
        lhs = 3.0 * converged(wright_eval(WrightParams(-1.0 / 3.0, 0.0), -z), "W").value;
    } else {
        lhs = z * converged(wright_eval(WrightParams(-1.0 / 3.0, 2.0 / 3.0), -z), "W").value;
    }
    return {lhs, rhs};
}

PairValues second_kind_point(const ParamPoint& p, const QuadratureSpec& spec)
{
    const double sigma = get(p, "sigma");
    const double beta = get(p, "beta");
    const double s = get(p, "s");
    const WrightParams wp(-sigma, beta);
    const DecayingSeries w([wp](double t) { return wright_eval(wp, -t); });
    const double lhs = laplace_forward([&](double t) { return w(t); }, s, spec, 0.0, w.cutoff()).value;
    return {lhs, ml(sigma, beta + sigma, -s)};
}

std::string point_params(const ParamPoint& p)
{
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) {
            out += ';';
        }
        out += k + "=" + format_double(v);
    }
    return out;
}

}  // namespace

std::vector<TransformPair> pairs_from_section(const ManifestSection& sec)
{
    if (sec.type() != "pair") {
        bad(sec, "unexpected section [" + sec.type() + "] in a pair manifest");
    }
    const std::string& kind = sec.text("kind");
    const auto it = kinds().find(kind);
    if (it == kinds().end()) {
        bad(sec, "unknown pair kind '" + kind + "'");
    }
    const KindInfo& info = it->second;

    TransformPair base;
    base.name = sec.text("name");
    base.kind = kind;
    if (sec.has("rel_tol")) {
        base.rel_tol = sec.number("rel_tol");
    }
    if (sec.has("abs_tol")) {
        base.abs_tol = sec.number("abs_tol");
    }
    if (!(base.rel_tol >= 0.0) || !(base.abs_tol >= 0.0)) {
        bad(sec, "tolerances must be non-negative");
    }

    const std::set<std::string> reserved = {"name", "kind", "variant", "rel_tol", "abs_tol"};
    for (const auto& [key, value] : sec.entries()) {
        if (reserved.count(key) == 0 &&
            std::find(info.params.begin(), info.params.end(), key) == info.params.end()) {
            bad(sec, "kind '" + kind + "' takes no parameter '" + key + "'");
        }
    }

    // Cartesian product in key order (the section's map order).
    base.grid = {ParamPoint{}};
    for (const auto& [key, value] : sec.entries()) {
        if (reserved.count(key) != 0) {
            continue;
        }
        const std::vector<double> values = sec.numbers(key);
        check_values(sec, key, values);
        std::vector<ParamPoint> next;
        for (const ParamPoint& partial : base.grid) {
            for (double v : values) {
                ParamPoint q = partial;
                q[key] = v;
                next.push_back(std::move(q));
            }
        }
        base.grid = std::move(next);
    }
    for (const std::string& key : info.params) {
        if (!sec.has(key)) {
            bad(sec, "kind '" + kind + "' requires parameter '" + key + "'");
        }
    }

    std::vector<TransformPair> out;
    if (info.variants.empty()) {
        if (sec.has("variant")) {
            bad(sec, "kind '" + kind + "' takes no variant");
        }
        out.push_back(std::move(base));
        return out;
    }
    const std::vector<std::string> variants = split_list(sec.text("variant"));
    if (variants.empty()) {
        bad(sec, "empty variant list");
    }
    for (const std::string& v : variants) {
        if (std::find(info.variants.begin(), info.variants.end(), v) == info.variants.end()) {
            bad(sec, "kind '" + kind + "' has no variant '" + v + "'");
        }
        TransformPair pair = base;
        pair.name = base.name + "/" + v;
        pair.variant = v;
        out.push_back(std::move(pair));
    }
    return out;
}

std::vector<TransformPair> load_pairs(const std::string& path)
{
    std::vector<TransformPair> out;
    for (const ManifestSection& sec : load_manifest(path)) {
        for (TransformPair& p : pairs_from_section(sec)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::string default_pairs_manifest()
{
    return std::string(WRIGHT_DATA_DIR) + "/pairs.manifest";
}

PairValues evaluate_pair_point(const TransformPair& pair, const ParamPoint& point, const QuadratureSpec& spec)
{
    const std::string& k = pair.kind;
    if (k == "wright_laplace" || k == "wright_shift" || k == "wright_hyperbolic" || k == "wright_tmul") {
        return wright_family(pair, point, spec);
    }
    if (k == "bessel_laplace") {
        return bessel_family(pair, point, spec);
    }
    if (k == "mainardi_half" || k == "mainardi_tn" || k == "mainardi_third") {
        return mainardi_family(pair, point, spec);
    }
    if (k == "mainardi_third_pointwise") {
        return third_pointwise(pair, point);
    }
    if (k == "second_kind") {
        return second_kind_point(point, spec);
    }
    throw DomainError("evaluate_pair_point: unknown pair kind '" + k + "'");
}

VerificationReport verify_pair(const TransformPair& pair, const QuadratureSpec& spec)
{
    std::vector<ReportRow> rows(pair.grid.size());
    parallel_for(pair.grid.size(), [&](std::size_t i) {
        const std::string params = point_params(pair.grid[i]);
        try {
            const PairValues v = evaluate_pair_point(pair, pair.grid[i], spec);
            rows[i] = compare_row(pair.name, params, v.lhs, v.rhs, pair.rel_tol, pair.abs_tol);
        } catch (const std::exception& e) {
            rows[i] = failure_row(pair.name, params, e.what());
        }
    });
    VerificationReport report;
    for (ReportRow& r : rows) {
        report.add(std::move(r));
    }
    return report;
}

}  // namespace wright
