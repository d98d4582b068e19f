#include "ampcalc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "ampcalc/errors.hpp"
#include "ampcalc/textio.hpp"

namespace ampcalc {

CheckResult CheckResult::from_residuals(std::string name, const std::vector<double>& residuals,
                                        double tolerance, bool require_above) {
    CheckResult r;
    r.name = std::move(name);
    r.cases = static_cast<int>(residuals.size());
    r.tolerance = tolerance;
    r.require_above = require_above;
    for (double v : residuals) r.max_residual = std::max(r.max_residual, v);
    if (!residuals.empty())
        r.mean_residual = std::accumulate(residuals.begin(), residuals.end(), 0.0) /
                          static_cast<double>(residuals.size());
    r.pass = require_above ? r.max_residual > tolerance : r.max_residual <= tolerance;
    return r;
}

void RunReport::add_param(const std::string& key, const std::string& value) {
    params.emplace_back(key, "\"" + json_escape(value) + "\"");
}

void RunReport::add_param(const std::string& key, long long value) {
    params.emplace_back(key, std::to_string(value));
}

void RunReport::add_param(const std::string& key, double value) {
    params.emplace_back(key, format_double(value));
}

bool RunReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string RunReport::to_json() const {
    std::ostringstream out;
    out << "{\n";
    out << "  \"suite\": \"" << json_escape(suite) << "\",\n";
    out << "  \"params\": {";
    for (std::size_t i = 0; i < params.size(); ++i) {
        out << (i ? ",\n    " : "\n    ");
        out << '"' << json_escape(params[i].first) << "\": " << params[i].second;
    }
    out << (params.empty() ? "" : "\n  ") << "},\n";
    out << "  \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& c = checks[i];
        out << (i ? ",\n" : "\n");
        out << "    {\n";
        out << "      \"name\": \"" << json_escape(c.name) << "\",\n";
        out << "      \"cases\": " << c.cases << ",\n";
        out << "      \"max_residual\": " << format_double(c.max_residual) << ",\n";
        out << "      \"mean_residual\": " << format_double(c.mean_residual) << ",\n";
        out << "      \"tolerance\": " << format_double(c.tolerance) << ",\n";
        out << "      \"requirement\": \""
            << (c.require_above ? "max_residual > tolerance" : "max_residual <= tolerance")
            << "\",\n";
        out << "      \"pass\": " << (c.pass ? "true" : "false") << "\n";
        out << "    }";
    }
    out << (checks.empty() ? "" : "\n  ") << "],\n";
    out << "  \"pass\": " << (all_pass() ? "true" : "false") << "\n";
    out << "}\n";
    return out.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw Error(ErrorCode::BadInput, "slope fit needs two or more matched points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw Error(ErrorCode::BadInput, "slope fit points are degenerate");
    return (n * sxy - sx * sy) / denom;
}

} // namespace ampcalc
