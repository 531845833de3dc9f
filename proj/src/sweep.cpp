#include "wright/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>

#include "wright/errors.hpp"
#include "wright/functions.hpp"
#include "wright/parallel.hpp"
#include "wright/report.hpp"

#ifndef WRIGHT_DATA_DIR
#define WRIGHT_DATA_DIR "data"
#endif

namespace wright {

GridRange::GridRange(double start, double stop, double step) : start_(start), step_(step), size_(0)
{
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw DomainError("sweep grid: start, stop and step must be finite");
    }
    if (!(step > 0.0)) {
        throw DomainError("sweep grid: requires step > 0");
    }
    if (!(start < stop)) {
        throw DomainError("sweep grid: requires start < stop");
    }
    size_ = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

void validate(const SweepSpec& spec)
{
    const FunctionInfo& info = find_function(spec.target);
    std::set<std::string> given;
    for (const auto& [key, value] : spec.fixed) {
        given.insert(key);
    }
    if (!given.insert(spec.sweep_var).second) {
        throw DomainError("sweep: '" + spec.sweep_var + "' is both fixed and swept");
    }
    const std::set<std::string> wanted(info.params.begin(), info.params.end());
    if (given != wanted) {
        std::string list;
        for (const std::string& p : info.params) {
            list += (list.empty() ? "" : ", ") + p;
        }
        throw DomainError("sweep: target " + info.name + " takes exactly the parameters " + list);
    }
}

std::vector<CurvePoint> run_sweep(const SweepSpec& spec)
{
    validate(spec);
    std::vector<CurvePoint> points(spec.grid.size());
    parallel_for(points.size(), [&](std::size_t i) {
        std::map<std::string, double> params = spec.fixed;
        const double x = spec.grid.at(i);
        params[spec.sweep_var] = x;
        CurvePoint& pt = points[i];
        pt.sweep_value = x;
        try {
            const SeriesEval r = evaluate_function(spec.target, params);
            pt.result = r.value;
            pt.terms_used = r.terms_used;
            pt.converged = r.converged;
        } catch (const ConvergenceError&) {
            pt.result = std::numeric_limits<double>::quiet_NaN();
            pt.converged = false;
        }
    });
    return points;
}

void write_curve_csv(std::ostream& out, const SweepSpec& spec, std::span<const CurvePoint> points)
{
    out << "sweep_var,value,result,terms_used,converged\n";
    for (const CurvePoint& p : points) {
        out << spec.sweep_var << ',' << format_double(p.sweep_value) << ',' << format_double(p.result) << ','
            << p.terms_used << ',' << (p.converged ? "true" : "false") << '\n';
    }
}

SweepSpec sweep_from_section(const ManifestSection& sec)
{
    if (sec.type() != "sweep") {
        throw ManifestError("manifest line " + std::to_string(sec.line()) + ": unexpected section [" + sec.type() +
                            "] in a sweep manifest");
    }
    const std::set<std::string> reserved = {"output", "target", "sweep_var", "start", "stop", "step"};
    std::map<std::string, double> fixed;
    for (const auto& [key, value] : sec.entries()) {
        if (reserved.count(key) == 0) {
            fixed[key] = sec.number(key);
        }
    }
    const std::string& output = sec.text("output");
    if (output.empty() || output.find('/') != std::string::npos || output.find('\\') != std::string::npos) {
        throw DomainError("sweep: output must be a plain file name, got '" + output + "'");
    }
    SweepSpec spec{sec.text("target"), std::move(fixed), sec.text("sweep_var"),
                   GridRange(sec.number("start"), sec.number("stop"), sec.number("step")), output};
    validate(spec);
    return spec;
}

std::string default_figures_manifest()
{
    return std::string(WRIGHT_DATA_DIR) + "/figures.manifest";
}

}  // namespace wright
