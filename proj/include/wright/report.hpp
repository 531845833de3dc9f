#pragma once

// Verification report rows and their CSV form:
// name,param-tuple,lhs,rhs,abs_err,rel_err,pass

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wright {

// 17 significant digits in %g style, independent of the locale.
std::string format_double(double x);

struct ReportRow {
    std::string name;
    std::string params;  // key=value pairs joined by ';'
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

// Row comparing lhs with the reference rhs; passes when rel_err <= rel_tol
// or abs_err <= abs_tol.
ReportRow compare_row(std::string name, std::string params, double lhs, double rhs, double rel_tol,
                      double abs_tol = 0.0);

// Row for a point that could not be evaluated.
ReportRow failure_row(std::string name, std::string params, const std::string& what);

class VerificationReport {
public:
    void add(ReportRow row) { rows_.push_back(std::move(row)); }
    void append(const VerificationReport& other);

    const std::vector<ReportRow>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    bool all_pass() const noexcept;
    std::size_t failures() const noexcept;
    // Largest finite deviations over all rows.
    double max_abs_err() const noexcept;
    double max_rel_err() const noexcept;

    void write_csv(std::ostream& out) const;
    void write_csv(const std::string& path) const;

private:
    std::vector<ReportRow> rows_;
};

// "a=1;b=2" from alternating keys and values.
std::string param_tuple(std::initializer_list<std::pair<std::string, double>> kv);

}  // namespace wright
