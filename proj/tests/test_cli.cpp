#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>

#include "wright/functions.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(WRIGHTFN_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Fresh scratch directory removed on scope exit.
class ScratchDir {
public:
    explicit ScratchDir(const std::string& tag)
        : path_(fs::temp_directory_path() / ("wrightfn_" + tag + "_" + std::to_string(::getpid())))
    {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~ScratchDir() { fs::remove_all(path_); }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    const fs::path& path() const noexcept { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

private:
    fs::path path_;
};

double value_line(const std::string& out)
{
    const auto pos = out.find("value = ");
    REQUIRE(pos != std::string::npos);
    return std::stod(out.substr(pos + 8));
}

std::size_t count_files(const fs::path& dir)
{
    if (!fs::exists(dir)) {
        return 0;
    }
    std::size_t n = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir)) {
        ++n;
    }
    return n;
}

const std::string kSweepSection = "[sweep]\noutput = %s\ntarget = dW_dalpha\nsweep_var = alpha\n"
                                  "start = 0\nstop = 5\nstep = 0.05\nbeta = 1\nt = %s\n";

std::string sweep_section(const std::string& output, const std::string& t)
{
    std::string s = kSweepSection;
    s.replace(s.find("%s"), 2, output);
    s.replace(s.find("%s"), 2, t);
    return s;
}

}  // namespace

TEST_CASE("eval examples")
{
    RunResult r = run("eval wright --alpha 1 --beta 1 --t -1");
    CHECK(r.code == 0);
    CHECK(value_line(r.out) == doctest::Approx(0.2238907791).epsilon(1e-10));
    CHECK(r.out.find("terms_used = ") != std::string::npos);
    CHECK(r.out.find("converged = true") != std::string::npos);

    r = run("eval mittag-leffler --alpha 1 --beta 1 --t 1");
    CHECK(r.code == 0);
    CHECK(value_line(r.out) == doctest::Approx(2.7182818285).epsilon(1e-10));

    r = run("eval wright --alpha 0.5 --beta 1 --t 0");
    CHECK(r.code == 0);
    CHECK(value_line(r.out) == 1.0);

    r = run("eval dW/dbeta --alpha 1 --beta 0 --t 2");
    CHECK(r.code == 0);
    CHECK(value_line(r.out) == doctest::Approx(0.53603736608446673).epsilon(1e-10));
}

TEST_CASE("eval prints 17 significant digits")
{
    const RunResult r = run("eval mainardi-m --sigma 0.5 --t 1");
    CHECK(r.code == 0);
    const std::regex digits(R"(value = 0\.[0-9]{17}\n[\s\S]*)");
    CHECK(std::regex_match(r.out, digits));
    CHECK(value_line(r.out) == doctest::Approx(std::exp(-0.25) / std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("eval error exit codes")
{
    RunResult r = run("eval wright --alpha -2 --beta 1 --t 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("alpha > -1") != std::string::npos);

    r = run("eval mainardi-m --sigma 1.5 --t 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("sigma") != std::string::npos);

    r = run("eval wright --alpha 1 --t 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("beta") != std::string::npos);

    CHECK(run("eval wright --alpha 1 --beta 1 --sigma 0.5 --t 1").code == 2);
    CHECK(run("eval nosuchfunction --t 1").code == 2);
    CHECK(run("eval wright --alpha 1 --beta 1 --t abc").code == 2);
    CHECK(run("").code == 2);

    r = run("eval mainardi-m --sigma 0.8 --t 4");
    CHECK(r.code == 3);
    CHECK(r.out.find("converged = false") != std::string::npos);
}

TEST_CASE("help lists every function and its domain")
{
    const RunResult r = run("--help");
    CHECK(r.code == 0);
    for (const wright::FunctionInfo& f : wright::function_catalog()) {
        CAPTURE(f.name);
        CHECK(r.out.find(f.name) != std::string::npos);
        CHECK(r.out.find(f.domain) != std::string::npos);
    }
}

TEST_CASE("sweep writes one CSV per curve")
{
    ScratchDir dir("sweep");
    std::string manifest;
    const char* ts[] = {"0.5", "1.0", "1.5", "1.75", "2.0"};
    for (int i = 0; i < 5; ++i) {
        manifest += sweep_section("fig1_curve" + std::to_string(i + 1) + ".csv", ts[i]);
    }
    dir.write("fig1.manifest", manifest);
    const RunResult r = run("sweep " + dir.file("fig1.manifest") + " --out-dir " + dir.file("out"));
    CHECK(r.code == 0);
    CHECK(count_files(dir.path() / "out") == 5);
    CHECK(r.out.find("fig1_curve5.csv") != std::string::npos);
    std::ifstream csv(dir.path() / "out" / "fig1_curve1.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "sweep_var,value,result,terms_used,converged");
}

TEST_CASE("sweep exit codes")
{
    ScratchDir dir("sweep_codes");
    dir.write("empty.manifest", "# nothing here\n");
    RunResult r = run("sweep " + dir.file("empty.manifest") + " --out-dir " + dir.file("empty"));
    CHECK(r.code == 0);
    CHECK(count_files(dir.path() / "empty") == 0);

    // The second section misses beta, so it is an invalid spec.
    std::string partial = sweep_section("good.csv", "1");
    std::string bad = sweep_section("bad.csv", "1");
    bad.erase(bad.find("beta = 1\n"), 9);
    dir.write("partial.manifest", partial + bad);
    r = run("sweep " + dir.file("partial.manifest") + " --out-dir " + dir.file("partial"));
    CHECK(r.code == 4);
    CHECK(fs::exists(dir.path() / "partial" / "good.csv"));
    CHECK_FALSE(fs::exists(dir.path() / "partial" / "bad.csv"));
    CHECK(r.out.find("invalid") != std::string::npos);

    dir.write("broken.manifest", "[sweep]\noutput = a.csv\nthis line is not key value\n");
    r = run("sweep " + dir.file("broken.manifest") + " --out-dir " + dir.file("broken"));
    CHECK(r.code == 2);
    CHECK(count_files(dir.path() / "broken") == 0);

    CHECK(run("sweep " + dir.file("missing.manifest")).code == 2);
}

TEST_CASE("verify exit codes and report")
{
    ScratchDir dir("verify");
    RunResult r = run("verify identities --out " + dir.file("identities.csv"));
    CHECK(r.code == 0);
    std::ifstream report(dir.file("identities.csv"));
    std::string header;
    std::getline(report, header);
    CHECK(header == "name,param-tuple,lhs,rhs,abs_err,rel_err,pass");
    std::stringstream rest;
    rest << report.rdbuf();
    CHECK(rest.str().find("adjudication/") != std::string::npos);
    CHECK(rest.str().find(",false\n") == std::string::npos);

    r = run("verify nosuchsuite --out " + dir.file("unknown.csv"));
    CHECK(r.code == 2);
    CHECK(fs::exists(dir.file("unknown.csv")));
}

TEST_CASE("verify laplace and limits pass")
{
    ScratchDir dir("verify2");
    CHECK(run("verify laplace --out " + dir.file("laplace.csv")).code == 0);
    CHECK(run("verify limits --out " + dir.file("limits.csv")).code == 0);
}
