#include "ampcalc/kernel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "ampcalc/errors.hpp"
#include "ampcalc/random.hpp"
#include "ampcalc/textio.hpp"

namespace ampcalc {

namespace {

void require_square_finite(const Matrix& m, int expected_sites) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw Error(ErrorCode::BadKernel, "step matrix must be square and nonempty");
    if (expected_sites > 0 && m.rows() != expected_sites)
        throw Error(ErrorCode::BadKernel, "step matrices disagree on grid size");
    if (!m.allFinite())
        throw Error(ErrorCode::BadKernel, "step matrix has non-finite entries");
}

} // namespace

StepKernel StepKernel::invariant(Matrix step) {
    require_square_finite(step, 0);
    StepKernel k;
    k.num_sites_ = static_cast<int>(step.rows());
    k.time_invariant_ = true;
    k.step_ = std::move(step);
    return k;
}

StepKernel StepKernel::time_varying(std::map<int, Matrix> steps) {
    if (steps.empty())
        throw Error(ErrorCode::BadKernel, "time-varying kernel needs at least one block");
    StepKernel k;
    k.num_sites_ = static_cast<int>(steps.begin()->second.rows());
    for (const auto& [t, m] : steps) require_square_finite(m, k.num_sites_);
    k.time_invariant_ = false;
    k.steps_ = std::move(steps);
    return k;
}

const Matrix& StepKernel::at(int time) const {
    if (time_invariant_) return step_;
    auto it = steps_.find(time);
    if (it == steps_.end())
        throw Error(ErrorCode::BadKernel,
                    "kernel has no block for step t=" + std::to_string(time));
    return it->second;
}

bool operator==(const StepKernel& a, const StepKernel& b) {
    if (a.num_sites_ != b.num_sites_ || a.time_invariant_ != b.time_invariant_) return false;
    if (a.time_invariant_) return a.step_ == b.step_;
    return a.steps_ == b.steps_;
}

StepKernel identity_kernel(int num_sites) {
    return StepKernel::invariant(Matrix::Identity(num_sites, num_sites));
}

StepKernel hadamard_kernel() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << h, h, h, -h;
    return StepKernel::invariant(m);
}

StepKernel dft_kernel(int num_sites) {
    Matrix m(num_sites, num_sites);
    const double norm = 1.0 / std::sqrt(static_cast<double>(num_sites));
    for (int j = 0; j < num_sites; ++j)
        for (int k = 0; k < num_sites; ++k) {
            double phase = -2.0 * std::numbers::pi * j * k / num_sites;
            m(j, k) = norm * Complex(std::cos(phase), std::sin(phase));
        }
    return StepKernel::invariant(m);
}

StepKernel random_kernel(int num_sites, Rng& rng) {
    // 1/sqrt(S) scaling keeps products of several steps at unit scale, so
    // the absolute tolerances of the rule checks stay meaningful.
    const double radius = 1.0 / std::sqrt(static_cast<double>(num_sites));
    Matrix m(num_sites, num_sites);
    for (int r = 0; r < num_sites; ++r)
        for (int c = 0; c < num_sites; ++c) m(r, c) = rng.complex_in_disk(radius);
    return StepKernel::invariant(m);
}

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

Matrix rows_to_matrix(const std::vector<std::string>& lines, std::size_t& pos, int size) {
    Matrix m(size, size);
    for (int r = 0; r < size; ++r) {
        if (pos >= lines.size())
            throw Error(ErrorCode::BadInput, "kernel file ends inside a matrix block");
        std::istringstream row(lines[pos++]);
        for (int c = 0; c < size; ++c) {
            std::string token;
            if (!(row >> token))
                throw Error(ErrorCode::BadInput,
                            "matrix row has fewer than " + std::to_string(size) + " entries");
            m(r, c) = parse_complex(token);
        }
        std::string extra;
        if (row >> extra)
            throw Error(ErrorCode::BadInput, "matrix row has extra entries");
    }
    return m;
}

} // namespace

StepKernel read_kernel(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!blank(line)) lines.push_back(line);
    if (lines.empty())
        throw Error(ErrorCode::BadInput, "empty kernel file");

    int size = 0;
    try {
        size = std::stoi(lines[0]);
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, "first line must be the number of sites");
    }
    if (size < 1)
        throw Error(ErrorCode::BadInput, "number of sites must be positive");

    std::size_t pos = 1;
    if (pos >= lines.size())
        throw Error(ErrorCode::BadInput, "kernel file has no matrix data");

    if (lines[pos].rfind("t=", 0) != 0) {
        Matrix m = rows_to_matrix(lines, pos, size);
        if (pos != lines.size())
            throw Error(ErrorCode::BadInput, "trailing content after the matrix block");
        return StepKernel::invariant(m);
    }

    std::map<int, Matrix> blocks;
    while (pos < lines.size()) {
        if (lines[pos].rfind("t=", 0) != 0)
            throw Error(ErrorCode::BadInput, "expected 't=<int>' block header, got '" +
                                                 lines[pos] + "'");
        int t = 0;
        try {
            t = std::stoi(lines[pos].substr(2));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadInput, "malformed block header '" + lines[pos] + "'");
        }
        ++pos;
        if (blocks.count(t))
            throw Error(ErrorCode::BadInput, "duplicate block for t=" + std::to_string(t));
        blocks.emplace(t, rows_to_matrix(lines, pos, size));
    }
    return StepKernel::time_varying(std::move(blocks));
}

StepKernel load_kernel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::BadInput, "cannot open kernel file '" + path + "'");
    return read_kernel(in);
}

std::string format_kernel(const StepKernel& kernel) {
    std::ostringstream out;
    out << kernel.num_sites() << "\n";
    auto write_rows = [&](const Matrix& m) {
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) {
                if (c) out << " ";
                out << format_complex(m(r, c));
            }
            out << "\n";
        }
    };
    if (kernel.is_time_invariant()) {
        write_rows(kernel.at(0));
    } else {
        bool first = true;
        for (const auto& [t, m] : kernel.blocks()) {
            if (!first) out << "\n";
            first = false;
            out << "t=" << t << "\n";
            write_rows(m);
        }
    }
    return out.str();
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::BadInput, "cannot open matrix file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!blank(line)) lines.push_back(line);
    if (lines.empty())
        throw Error(ErrorCode::BadInput, "empty matrix file");
    int size = 0;
    try {
        size = std::stoi(lines[0]);
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, "first line must be the matrix size");
    }
    if (size < 1)
        throw Error(ErrorCode::BadInput, "matrix size must be positive");
    std::size_t pos = 1;
    Matrix m = rows_to_matrix(lines, pos, size);
    if (pos != lines.size())
        throw Error(ErrorCode::BadInput, "trailing content after the matrix");
    return m;
}

} // namespace ampcalc
