#include "ampcalc/schrodinger.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "ampcalc/errors.hpp"

namespace ampcalc {

WaveFunction delta_state(int num_sites, int site, int time) {
    if (site < 0 || site >= num_sites)
        throw Error(ErrorCode::SiteOutOfRange, "delta site outside grid");
    WaveFunction psi{Vector::Zero(num_sites), time};
    psi.values(site) = 1.0;
    return psi;
}

WaveFunction propagate(const WaveFunction& psi, const StepKernel& kernel, int steps) {
    if (steps < 1)
        throw Error(ErrorCode::BadInput, "propagation needs at least one step");
    if (kernel.num_sites() != psi.values.size())
        throw Error(ErrorCode::GridMismatch, "kernel and state grid sizes differ");
    WaveFunction out = psi;
    for (int i = 0; i < steps; ++i) {
        out.values = kernel.at(out.time) * out.values;
        ++out.time;
    }
    return out;
}

Evolver make_linear_evolver(const StepKernel& kernel) {
    Evolver e;
    e.kind = Evolver::Kind::LinearKernel;
    e.step = [kernel](const WaveFunction& psi) { return propagate(psi, kernel, 1); };
    return e;
}

Evolver make_nonlinear_evolver(const StepKernel& kernel, double strength) {
    Evolver e;
    e.kind = Evolver::Kind::Nonlinear;
    e.strength = strength;
    e.step = [kernel, strength](const WaveFunction& psi) {
        WaveFunction out = propagate(psi, kernel, 1);
        for (Eigen::Index x = 0; x < out.values.size(); ++x) {
            double density = std::norm(out.values(x));
            out.values(x) *= Complex(std::cos(strength * density), std::sin(strength * density));
        }
        return out;
    };
    return e;
}

StepKernel kernel_from_hamiltonian(const Hamiltonian& h, double eps) {
    if (eps <= 0.0)
        throw Error(ErrorCode::BadInput, "step duration must be positive");
    Matrix exponent = Complex(0.0, eps / h.hbar) * h.matrix;
    return StepKernel::invariant(exponent.exp());
}

HamiltonianExtraction extract_hamiltonian(const KernelFamily& family, double eps, double hbar) {
    if (eps <= 0.0)
        throw Error(ErrorCode::BadInput, "step duration must be positive");

    auto estimate = [&](double e) {
        const StepKernel kernel = family(e);
        const Matrix& k = kernel.at(0);
        Matrix delta = k - Matrix::Identity(k.rows(), k.cols());
        if (delta.norm() > 0.5)
            throw Error(ErrorCode::SingularFamily,
                        "||K(eps) - I|| = " + std::to_string(delta.norm()) +
                            " at eps=" + std::to_string(e) + "; too far from identity");
        return Matrix(delta * (hbar / Complex(0.0, e)));
    };

    Matrix coarse = estimate(eps);
    Matrix fine = estimate(eps / 2.0);
    HamiltonianExtraction out;
    out.plain = Hamiltonian{coarse, hbar};
    out.richardson = Hamiltonian{2.0 * fine - coarse, hbar};
    out.step_error = (fine - coarse).norm();
    return out;
}

double linearity_residual(const Evolver& evolver, const WaveFunction& psi1,
                          const WaveFunction& psi2, Complex alpha, Complex beta, int steps) {
    if (psi1.values.size() != psi2.values.size() || psi1.time != psi2.time)
        throw Error(ErrorCode::GridMismatch, "states must share grid and time");
    WaveFunction mixed{alpha * psi1.values + beta * psi2.values, psi1.time};
    Vector direct = evolver.evolve(mixed, steps).values;
    Vector split = alpha * evolver.evolve(psi1, steps).values +
                   beta * evolver.evolve(psi2, steps).values;
    return (direct - split).cwiseAbs().maxCoeff();
}

double consistency_residual(const Evolver& evolver, const WaveFunction& psi, int steps) {
    Vector direct = evolver.evolve(psi, steps).values;
    Vector assembled = Vector::Zero(psi.values.size());
    for (Eigen::Index x = 0; x < psi.values.size(); ++x) {
        if (psi.values(x) == Complex(0.0)) continue;
        WaveFunction basis = delta_state(static_cast<int>(psi.values.size()),
                                         static_cast<int>(x), psi.time);
        assembled += psi.values(x) * evolver.evolve(basis, steps).values;
    }
    return (direct - assembled).cwiseAbs().maxCoeff();
}

} // namespace ampcalc
