#pragma once

// One-parameter sweeps of a series function, written one CSV per curve:
//   sweep_var,value,result,terms_used,converged
//
// Manifest sections:
//
//   [sweep]
//   output = fig1_curve1.csv
//   target = dW_dalpha
//   sweep_var = alpha
//   start = 0
//   stop = 5
//   step = 0.05
//   beta = 1
//   t = 0.5
//
// Keys other than output, target, sweep_var, start, stop and step are the
// fixed parameters of the target.

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wright/manifest.hpp"

namespace wright {

// start, start + step, ... up to stop (inclusive within 1e-9 step).
class GridRange {
public:
    // DomainError unless step > 0, start < stop and all are finite.
    GridRange(double start, double stop, double step);

    std::size_t size() const noexcept { return size_; }
    double at(std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }

private:
    double start_;
    double step_;
    std::size_t size_;
};

struct SweepSpec {
    std::string target;
    std::map<std::string, double> fixed;
    std::string sweep_var;
    GridRange grid;
    std::string output;
};

struct CurvePoint {
    double sweep_value = 0.0;
    double result = 0.0;
    int terms_used = 0;
    bool converged = false;
};

// DomainError unless the target is known and fixed + sweep_var cover
// exactly its parameters.
void validate(const SweepSpec& spec);

// One point per grid value in ascending order. A point whose series does not
// converge is kept with converged = false; a domain error aborts the sweep.
std::vector<CurvePoint> run_sweep(const SweepSpec& spec);

void write_curve_csv(std::ostream& out, const SweepSpec& spec, std::span<const CurvePoint> points);

// ManifestError for a missing key or a non-numeric value; DomainError for a
// well-formed section that describes an invalid sweep.
SweepSpec sweep_from_section(const ManifestSection& section);

std::string default_figures_manifest();

}  // namespace wright
