#include "wright/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace wright {

std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

ReportRow compare_row(std::string name, std::string params, double lhs, double rhs, double rel_tol,
                      double abs_tol)
{
    ReportRow row;
    row.name = std::move(name);
    row.params = std::move(params);
    row.lhs = lhs;
    row.rhs = rhs;
    row.abs_err = std::fabs(lhs - rhs);
    row.rel_err = rhs != 0.0 ? row.abs_err / std::fabs(rhs) : (row.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    row.pass = std::isfinite(row.abs_err) && (row.rel_err <= rel_tol || row.abs_err <= abs_tol);
    return row;
}

ReportRow failure_row(std::string name, std::string params, const std::string& what)
{
    ReportRow row;
    row.name = std::move(name);
    row.params = std::move(params);
    if (!row.params.empty()) {
        row.params += ';';
    }
    row.params += "error=" + what;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.lhs = row.rhs = row.abs_err = row.rel_err = nan;
    row.pass = false;
    return row;
}

void VerificationReport::append(const VerificationReport& other)
{
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool VerificationReport::all_pass() const noexcept
{
    return std::all_of(rows_.begin(), rows_.end(), [](const ReportRow& r) { return r.pass; });
}

std::size_t VerificationReport::failures() const noexcept
{
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const ReportRow& r) { return !r.pass; }));
}

double VerificationReport::max_abs_err() const noexcept
{
    double m = 0.0;
    for (const ReportRow& r : rows_) {
        if (std::isfinite(r.abs_err)) {
            m = std::max(m, r.abs_err);
        }
    }
    return m;
}

double VerificationReport::max_rel_err() const noexcept
{
    double m = 0.0;
    for (const ReportRow& r : rows_) {
        if (std::isfinite(r.rel_err)) {
            m = std::max(m, r.rel_err);
        }
    }
    return m;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void VerificationReport::write_csv(std::ostream& out) const
{
    out << "name,param-tuple,lhs,rhs,abs_err,rel_err,pass\n";
    for (const ReportRow& r : rows_) {
        out << csv_field(r.name) << ',' << csv_field(r.params) << ',' << format_double(r.lhs) << ','
            << format_double(r.rhs) << ',' << format_double(r.abs_err) << ',' << format_double(r.rel_err) << ','
            << (r.pass ? "true" : "false") << '\n';
    }
}

void VerificationReport::write_csv(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open report file " + path);
    }
    write_csv(out);
    if (!out) {
        throw std::runtime_error("failed writing report file " + path);
    }
}

std::string param_tuple(std::initializer_list<std::pair<std::string, double>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) {
            s += ';';
        }
        s += k + '=' + format_double(v);
    }
    return s;
}

}  // namespace wright
