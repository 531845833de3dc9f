// wrightfn: point evaluation, figure sweeps and verification suites.
//
// Exit codes:
//   0  success
//   1  verify: at least one row failed
//   2  domain error, malformed manifest, unknown suite or execution error
//   3  eval: series did not converge
//   4  sweep: at least one curve could not be produced

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wright/errors.hpp"
#include "wright/functions.hpp"
#include "wright/manifest.hpp"
#include "wright/report.hpp"
#include "wright/suites.hpp"
#include "wright/sweep.hpp"

namespace {

constexpr int kExitFailedRows = 1;
constexpr int kExitError = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitPartialSweep = 4;

std::string catalog_text()
{
    std::string text = "Functions (parameters; domain):\n";
    for (const wright::FunctionInfo& f : wright::function_catalog()) {
        std::string params;
        for (const std::string& p : f.params) {
            params += (params.empty() ? "" : ", ") + p;
        }
        text += "  " + f.name + " (" + params + "; " + f.domain + ")\n";
    }
    text += "Names also accept '-' or '/' for '_', e.g. mittag-leffler, dW/dalpha.\n";
    text += "Suites: identities, laplace, limits, all.\n";
    text += "WRIGHT_THREADS sets the number of worker threads.";
    return text;
}

struct EvalArgs {
    std::string function;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> sigma;
    std::optional<double> t;
};

int run_eval(const EvalArgs& args)
{
    std::map<std::string, double> params;
    const std::pair<const char*, const std::optional<double>*> given[] = {
        {"alpha", &args.alpha}, {"beta", &args.beta}, {"sigma", &args.sigma}, {"t", &args.t}};
    for (const auto& [name, value] : given) {
        if (value->has_value()) {
            params[name] = **value;
        }
    }
    try {
        const wright::SeriesEval r = wright::evaluate_function(args.function, params);
        std::cout << "value = " << wright::format_double(r.value) << '\n'
                  << "terms_used = " << r.terms_used << '\n'
                  << "converged = " << (r.converged ? "true" : "false") << '\n';
        if (!r.converged) {
            std::cerr << "error: series did not converge\n";
            return kExitNoConvergence;
        }
        return 0;
    } catch (const wright::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitError;
    } catch (const wright::OverflowError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitError;
    } catch (const wright::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoConvergence;
    }
}

struct CurveStatus {
    std::string output;
    std::string target;
    std::size_t points = 0;
    std::size_t unconverged = 0;
    std::string status;
};

int run_sweep_command(const std::string& manifest, const std::string& out_dir)
{
    std::vector<wright::ManifestSection> sections;
    try {
        sections = wright::load_manifest(manifest);
    } catch (const wright::ManifestError& e) {
        std::cerr << "manifest error: " << e.what() << '\n';
        return kExitError;
    }

    // Parse every section before running any, so a malformed manifest writes nothing.
    std::vector<std::optional<wright::SweepSpec>> specs;
    std::vector<CurveStatus> status;
    try {
        for (const wright::ManifestSection& sec : sections) {
            CurveStatus st;
            st.output = sec.has("output") ? sec.text("output") : "?";
            st.target = sec.has("target") ? sec.text("target") : "?";
            try {
                specs.emplace_back(wright::sweep_from_section(sec));
            } catch (const wright::DomainError& e) {
                specs.emplace_back(std::nullopt);
                st.status = std::string("invalid: ") + e.what();
            }
            status.push_back(st);
        }
    } catch (const wright::ManifestError& e) {
        std::cerr << "manifest error: " << e.what() << '\n';
        return kExitError;
    }

    bool partial = false;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CurveStatus& st = status[i];
        if (!specs[i]) {
            partial = true;
            continue;
        }
        const wright::SweepSpec& spec = *specs[i];
        try {
            const std::vector<wright::CurvePoint> curve = wright::run_sweep(spec);
            std::filesystem::create_directories(out_dir);
            const std::string path = (std::filesystem::path(out_dir) / spec.output).string();
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot open " + path);
            }
            wright::write_curve_csv(out, spec, curve);
            if (!out) {
                throw std::runtime_error("failed writing " + path);
            }
            st.points = curve.size();
            for (const wright::CurvePoint& p : curve) {
                st.unconverged += p.converged ? 0 : 1;
            }
            st.status = "written";
        } catch (const std::exception& e) {
            partial = true;
            st.status = std::string("failed: ") + e.what();
        }
    }

    std::printf("%-24s %-14s %7s %12s  %s\n", "output", "target", "points", "unconverged", "status");
    for (const CurveStatus& st : status) {
        std::printf("%-24s %-14s %7zu %12zu  %s\n", st.output.c_str(), st.target.c_str(), st.points, st.unconverged,
                    st.status.c_str());
    }
    return partial ? kExitPartialSweep : 0;
}

int run_verify(const std::string& suite, std::string out_path)
{
    if (out_path.empty()) {
        out_path = "verify_" + suite + ".csv";
    }
    wright::VerificationReport report;
    int code = 0;
    try {
        report = wright::run_suite(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kExitError;
    }
    try {
        report.write_csv(out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    if (code != 0) {
        return code;
    }
    for (const wright::ReportRow& row : report.rows()) {
        if (!row.pass) {
            std::cout << "FAIL " << row.name << " [" << row.params << "] lhs=" << wright::format_double(row.lhs)
                      << " rhs=" << wright::format_double(row.rhs) << '\n';
        }
    }
    std::cout << "suite " << suite << ": " << report.rows().size() << " rows, " << report.failures()
              << " failed, max rel err " << wright::format_double(report.max_rel_err()) << ", report " << out_path
              << '\n';
    return report.all_pass() ? 0 : kExitFailedRows;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Wright, Mittag-Leffler and Mainardi functions: evaluation, sweeps and verification"};
    app.footer(catalog_text());
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    eval->add_option("function", eval_args.function, "Function name")->required();
    eval->add_option("--alpha", eval_args.alpha, "alpha");
    eval->add_option("--beta", eval_args.beta, "beta");
    eval->add_option("--sigma", eval_args.sigma, "sigma");
    eval->add_option("--t", eval_args.t, "Argument t");
    eval->footer(catalog_text());

    std::string manifest;
    std::string out_dir = ".";
    CLI::App* sweep = app.add_subcommand("sweep", "Write one CSV per curve of a sweep manifest");
    sweep->add_option("manifest", manifest, "Sweep manifest")->required();
    sweep->add_option("--out-dir", out_dir, "Directory for the CSV files")->capture_default_str();

    std::string suite;
    std::string report_path;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite and write its report");
    verify->add_option("suite", suite, "identities, laplace, limits or all")->required();
    verify->add_option("--out", report_path, "Report CSV (default verify_<suite>.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    if (eval->parsed()) {
        return run_eval(eval_args);
    }
    if (sweep->parsed()) {
        return run_sweep_command(manifest, out_dir);
    }
    return run_verify(suite, report_path);
}
