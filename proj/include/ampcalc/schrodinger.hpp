// Wave-function evolution, its Hamiltonian generator, and the residuals
// that separate linear from nonlinear one-step maps.
//
// A state propagated by a step kernel is the amplitude calculus with the
// source marginalized away, so kernel evolution is linear by construction.
// kernel_from_hamiltonian realizes K(eps) = exp(i eps H / hbar) (so that
// K(eps) = I + i eps H / hbar + O(eps^2)); extract_hamiltonian inverts the
// relation by finite differences. The residual probes quantify how far an
// arbitrary one-step map is from respecting superpositions: zero for every
// kernel evolver, strictly positive for the shipped nonlinear family.

#ifndef AMPCALC_SCHRODINGER_HPP
#define AMPCALC_SCHRODINGER_HPP

#include <functional>

#include "ampcalc/kernel.hpp"

namespace ampcalc {

//! Complex state over the sites of the grid at one time index.
struct WaveFunction {
    Vector values;
    int time = 0;
};

//! Generator of one-step evolution; hermiticity is not assumed.
struct Hamiltonian {
    Matrix matrix;
    double hbar = 1.0;
};

//! A one-step state map. Kernel evolvers apply exactly one matrix per step.
struct Evolver {
    enum class Kind { LinearKernel, Nonlinear };

    Kind kind = Kind::LinearKernel;
    double strength = 0.0; // nonlinear phase strength; 0 for linear evolvers
    std::function<WaveFunction(const WaveFunction&)> step;

    WaveFunction evolve(WaveFunction psi, int steps) const {
        for (int i = 0; i < steps; ++i) psi = step(psi);
        return psi;
    }
};

WaveFunction delta_state(int num_sites, int site, int time = 0);

//! Apply `steps` kernel matrices to the state.
WaveFunction propagate(const WaveFunction& psi, const StepKernel& kernel, int steps);

Evolver make_linear_evolver(const StepKernel& kernel);

//! One step = kernel matrix, then the sitewise phase map
//! psi_x -> psi_x * exp(i * strength * |psi_x|^2). Norm preserving, and
//! exactly the linear evolver at strength 0.
Evolver make_nonlinear_evolver(const StepKernel& kernel, double strength);

//! K(eps) = exp(i eps H / hbar).
StepKernel kernel_from_hamiltonian(const Hamiltonian& h, double eps);

//! Finite-difference estimates of the kernel family's generator at eps and
//! the Richardson improvement from eps/2. `step_error` = Frobenius distance
//! between the two plain estimates, an indicator of the plain estimate's
//! truncation error.
struct HamiltonianExtraction {
    Hamiltonian plain;       // (hbar / (i eps)) (K(eps) - I)
    Hamiltonian richardson;  // 2 H_est(eps/2) - H_est(eps)
    double step_error = 0.0;
};

using KernelFamily = std::function<StepKernel(double)>;

//! Throws SingularFamily when ||K(eps) - I||_F > 0.5 (eps too large).
HamiltonianExtraction extract_hamiltonian(const KernelFamily& family, double eps,
                                          double hbar = 1.0);

//! ||E(a psi1 + b psi2) - a E(psi1) - b E(psi2)||_inf after `steps` steps.
double linearity_residual(const Evolver& evolver, const WaveFunction& psi1,
                          const WaveFunction& psi2, Complex alpha, Complex beta, int steps);

//! ||E(psi) - sum_x psi(x) E(delta_x)||_inf after `steps` steps: the whole
//! state evolved directly versus through its site decomposition. Zero for
//! any linear evolver.
double consistency_residual(const Evolver& evolver, const WaveFunction& psi, int steps);

} // namespace ampcalc

#endif
