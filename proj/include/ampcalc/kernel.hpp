// One-time-step transition kernels.
//
// A StepKernel holds, for each unit time step t -> t+1, a complex SxS matrix
// K_t[x', x]: the elementary amplitude for moving from site x at t to site
// x' at t+1. The kernel is the calculus's only physical input; nothing here
// assumes unitarity. Either one time-invariant matrix or an explicit map
// from step index to matrix.

#ifndef AMPCALC_KERNEL_HPP
#define AMPCALC_KERNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <map>
#include <string>

namespace ampcalc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class Rng;

class StepKernel {
public:
    //! Same matrix at every step.
    static StepKernel invariant(Matrix step);

    //! Explicit matrix per step index; steps not listed are undefined.
    static StepKernel time_varying(std::map<int, Matrix> steps);

    int num_sites() const { return num_sites_; }
    bool is_time_invariant() const { return time_invariant_; }

    //! Matrix for the step `time` -> `time`+1. Throws BadKernel when a
    //! time-varying kernel has no block for this step.
    const Matrix& at(int time) const;

    //! Block map of a time-varying kernel; empty for time-invariant ones.
    const std::map<int, Matrix>& blocks() const { return steps_; }

    friend bool operator==(const StepKernel&, const StepKernel&);

private:
    StepKernel() = default;

    int num_sites_ = 0;
    bool time_invariant_ = true;
    Matrix step_;                  // time-invariant case
    std::map<int, Matrix> steps_;  // time-varying case
};

// Built-in kernels.
StepKernel identity_kernel(int num_sites);
StepKernel hadamard_kernel();                       // 2 sites: (1/sqrt2) [[1,1],[1,-1]]
StepKernel dft_kernel(int num_sites);               // unitary DFT, entries e^{-2pi i jk/S}/sqrt(S)
StepKernel random_kernel(int num_sites, Rng& rng);  // entries uniform in the disk of radius 1/sqrt(S)

// Plain-text kernel files: first line S, then S rows of S `re+imi` entries.
// Time-dependent kernels are concatenated blocks, each headed by `t=<int>`
// and separated by blank lines.
StepKernel read_kernel(std::istream& in);
StepKernel load_kernel_file(const std::string& path);
std::string format_kernel(const StepKernel& kernel);

//! Single matrix in the same row format (used for Hamiltonian files).
Matrix read_matrix_file(const std::string& path);

} // namespace ampcalc

#endif
