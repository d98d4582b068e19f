// Run reports for the CLI suites.
//
// Reports are rendered by hand so that identical inputs give byte-identical
// output: keys stay in insertion order and every float is written with 17
// significant digits. Wall time goes to stderr, never into the report.

#ifndef AMPCALC_REPORT_HPP
#define AMPCALC_REPORT_HPP

#include <string>
#include <vector>

namespace ampcalc {

struct CheckResult {
    std::string name;
    int cases = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double tolerance = 0.0;
    bool require_above = false; // negative controls must exceed the tolerance
    bool pass = false;

    static CheckResult from_residuals(std::string name, const std::vector<double>& residuals,
                                      double tolerance, bool require_above = false);
};

struct RunReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params; // key, rendered JSON value
    std::vector<CheckResult> checks;

    void add_param(const std::string& key, const std::string& value);
    void add_param(const std::string& key, long long value);
    void add_param(const std::string& key, double value);

    bool all_pass() const;
    std::string to_json() const;
};

std::string json_escape(const std::string& s);

//! Slope of the least-squares line through (x, y); sizes must match, >= 2.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace ampcalc

#endif
