#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>

#include "wright/errors.hpp"
#include "wright/functions.hpp"
#include "wright/manifest.hpp"
#include "wright/param_deriv.hpp"
#include "wright/sweep.hpp"

using namespace wright;

namespace {

SweepSpec alpha_sweep(const std::string& target, double t, double start = 0.0, double stop = 5.0)
{
    return {target, {{"beta", 1.0}, {"t", t}}, "alpha", GridRange(start, stop, 0.05), "out.csv"};
}

std::string csv_of(const SweepSpec& spec)
{
    std::ostringstream out;
    const std::vector<CurvePoint> pts = run_sweep(spec);
    write_curve_csv(out, spec, pts);
    return out.str();
}

std::vector<ManifestSection> sections(const std::string& text)
{
    std::istringstream in(text);
    return parse_manifest(in);
}

}  // namespace

TEST_CASE("grid range")
{
    const GridRange g(0.0, 5.0, 0.05);
    CHECK(g.size() == 101);
    CHECK(g.at(100) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(GridRange(0.0, 0.04, 0.05).size() == 1);
    CHECK(GridRange(0.25, 4.0, 0.25).size() == 16);
    CHECK_THROWS_AS(GridRange(1.0, 1.0, 0.1), DomainError);
    CHECK_THROWS_AS(GridRange(2.0, 1.0, 0.1), DomainError);
    CHECK_THROWS_AS(GridRange(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(GridRange(0.0, 1.0, -0.1), DomainError);
    CHECK_THROWS_AS(GridRange(0.0, INFINITY, 0.1), DomainError);
}

TEST_CASE("degenerate sweep of one point")
{
    const SweepSpec spec{"wright", {{"beta", 1.0}, {"t", 1.0}}, "alpha", GridRange(0.5, 0.52, 0.05), "x.csv"};
    const std::vector<CurvePoint> pts = run_sweep(spec);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].sweep_value == 0.5);
    CHECK(pts[0].converged);
}

TEST_CASE("sweep values equal direct evaluation and are ordered")
{
    const SweepSpec spec = alpha_sweep("dW_dalpha", 2.0);
    const std::vector<CurvePoint> pts = run_sweep(spec);
    REQUIRE(pts.size() == 101);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].sweep_value == spec.grid.at(i));
        CHECK(pts[i].converged);
        CHECK(pts[i].result == dW_dalpha({spec.grid.at(i), 1.0}, 2.0).value);
    }
    CHECK(pts.back().result == doctest::Approx(-0.0284378868).epsilon(1e-9));
}

TEST_CASE("dW_dalpha alpha-sweep at t = 2 has a single minimum in (0, 1)")
{
    std::vector<CurvePoint> pts = run_sweep(alpha_sweep("dW_dalpha", 2.0));
    pts.erase(pts.begin());
    const auto it = std::min_element(pts.begin(), pts.end(),
                                     [](const CurvePoint& a, const CurvePoint& b) { return a.result < b.result; });
    CHECK(it->sweep_value > 0.0);
    CHECK(it->sweep_value < 1.0);
    int changes = 0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const double d0 = pts[i].result - pts[i - 1].result;
        const double d1 = pts[i + 1].result - pts[i].result;
        changes += (d0 < 0.0) != (d1 < 0.0) ? 1 : 0;
    }
    CHECK(changes == 1);
}

TEST_CASE("dW_dbeta alpha-sweep at t = 0.5: value at alpha = 5 (frozen oracle)")
{
    const std::vector<CurvePoint> pts = run_sweep(alpha_sweep("dW_dbeta", 0.5));
    CHECK(pts.back().result == doctest::Approx(0.5701067602730273).epsilon(1e-9));
}

TEST_CASE("CSV format and determinism")
{
    const SweepSpec spec = alpha_sweep("dW_dbeta", 1.0, 0.0, 0.2);
    const std::string a = csv_of(spec);
    CHECK(a == csv_of(spec));
    std::istringstream in(a);
    std::string line;
    std::getline(in, line);
    CHECK(line == "sweep_var,value,result,terms_used,converged");
    const std::regex row(R"(alpha,[-0-9.e+]+,[-0-9.e+]+,[0-9]+,(true|false))");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(std::regex_match(line, row));
        ++rows;
    }
    CHECK(rows == 5);
    CHECK(a.find('\r') == std::string::npos);
    CHECK(a.find("alpha,0.050000000000000003,") != std::string::npos);
}

TEST_CASE("results do not depend on the thread count")
{
    const SweepSpec spec = alpha_sweep("d2W_dalpha2", 1.5);
    ::setenv("WRIGHT_THREADS", "1", 1);
    const std::string one = csv_of(spec);
    ::setenv("WRIGHT_THREADS", "4", 1);
    const std::string four = csv_of(spec);
    ::unsetenv("WRIGHT_THREADS");
    CHECK(one == four);
}

TEST_CASE("validation of the parameter set")
{
    CHECK_NOTHROW(validate(alpha_sweep("dW_dalpha", 1.0)));
    CHECK_THROWS_AS(validate({"dW_dalpha", {{"t", 1.0}}, "alpha", GridRange(0, 1, 0.1), "o"}), DomainError);
    CHECK_THROWS_AS(validate({"dW_dalpha", {{"beta", 1.0}, {"t", 1.0}, {"sigma", 0.5}}, "alpha",
                              GridRange(0, 1, 0.1), "o"}),
                    DomainError);
    CHECK_THROWS_AS(validate({"dW_dalpha", {{"alpha", 1.0}, {"beta", 1.0}, {"t", 1.0}}, "alpha",
                              GridRange(0, 1, 0.1), "o"}),
                    DomainError);
    CHECK_THROWS_AS(validate({"nope", {{"beta", 1.0}, {"t", 1.0}}, "alpha", GridRange(0, 1, 0.1), "o"}),
                    DomainError);
    // A domain violation inside the grid aborts the sweep.
    CHECK_THROWS_AS(run_sweep({"mainardi_m", {{"t", 1.0}}, "sigma", GridRange(0.5, 1.5, 0.25), "o"}), DomainError);
}

TEST_CASE("non-converged points are kept")
{
    const std::vector<CurvePoint> pts =
        run_sweep({"mainardi_m", {{"sigma", 0.8}}, "t", GridRange(2.0, 4.0, 1.0), "o"});
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].converged);
    CHECK_FALSE(pts[2].converged);
}

TEST_CASE("sweep manifest sections")
{
    const auto ok = sections("[sweep]\noutput = a.csv\ntarget = dW/dalpha\nsweep_var = alpha\n"
                             "start = 0\nstop = 5\nstep = 0.05\nbeta = 1\nt = 0.5\n");
    const SweepSpec spec = sweep_from_section(ok.at(0));
    CHECK(spec.target == "dW/dalpha");
    CHECK(spec.grid.size() == 101);
    CHECK(spec.fixed.at("t") == 0.5);

    CHECK_THROWS_AS(sweep_from_section(sections("[pair]\nname = x\n").at(0)), ManifestError);
    CHECK_THROWS_AS(sweep_from_section(sections("[sweep]\noutput = a.csv\nsweep_var = alpha\n"
                                                "start = 0\nstop = 5\nstep = 0.05\nbeta = 1\nt = 0.5\n")
                                           .at(0)),
                    ManifestError);
    CHECK_THROWS_AS(sweep_from_section(sections("[sweep]\noutput = a.csv\ntarget = wright\nsweep_var = alpha\n"
                                                "start = 0\nstop = 5\nstep = x\nbeta = 1\nt = 0.5\n")
                                           .at(0)),
                    ManifestError);
    CHECK_THROWS_AS(sweep_from_section(sections("[sweep]\noutput = ../a.csv\ntarget = wright\nsweep_var = alpha\n"
                                                "start = 0\nstop = 5\nstep = 0.1\nbeta = 1\nt = 0.5\n")
                                           .at(0)),
                    DomainError);
    CHECK_THROWS_AS(sweep_from_section(sections("[sweep]\noutput = a.csv\ntarget = wright\nsweep_var = alpha\n"
                                                "start = 5\nstop = 0\nstep = 0.1\nbeta = 1\nt = 0.5\n")
                                           .at(0)),
                    DomainError);
}

TEST_CASE("shipped figures manifest")
{
    const auto secs = load_manifest(default_figures_manifest());
    REQUIRE(secs.size() == 18);
    const std::regex name(R"(fig[1-4]_curve[1-5]\.csv)");
    for (const ManifestSection& sec : secs) {
        const SweepSpec spec = sweep_from_section(sec);
        CHECK(std::regex_match(spec.output, name));
        CHECK(spec.grid.size() == 101);
        CHECK(spec.sweep_var == "alpha");
    }
}
