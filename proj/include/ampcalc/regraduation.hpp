// Numeric construction and verification of the combination-rule solutions.
//
// Any invertible map on a complex domain induces a binary "sum" rule
// S(u,v) = inverse(forward(u) + forward(v)), associative wherever defined.
// Conversely, associativity plus distributivity against addition pins the
// "product" rule down to P(u,v) = A u v, reachable through the power map
// zeta(u) = (A u)^C. This module builds both representations, sweeps their
// residuals on seeded samples, and rewrites a consistent assignment of
// complex values to setups into the plain sum-rule form.
//
// Fractional powers always use the principal branch. Samples whose
// intermediate values would cross a cut or leave the stated domain are
// skipped and counted, never wrapped.

#ifndef AMPCALC_REGRADUATION_HPP
#define AMPCALC_REGRADUATION_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ampcalc/kernel.hpp"
#include "ampcalc/lattice.hpp"
#include "ampcalc/random.hpp"

namespace ampcalc {

//! Invertible change of variables on a stated complex domain D.
//! sample_domain yields points of D chosen so the tested operations
//! (pairwise and triple combination) stay inside D.
struct Regraduator {
    std::string name;
    std::function<Complex(Complex)> forward;
    std::function<Complex(Complex)> inverse;
    std::function<bool(Complex)> in_image;      // membership in forward(D)
    std::function<Complex(Rng&)> sample_domain;
};

// Shipped families.
Regraduator identity_regraduator();
Regraduator linear_regraduator(Complex scale);
//! u -> u^(2k+1) on the sector |arg u| < pi/(2(2k+1)), principal-root inverse;
//! images live in the right half plane, which is closed under addition.
Regraduator odd_power_regraduator(int k);

//! A binary combination map that may be undefined at a point (domain escape).
using BinaryRule = std::function<std::optional<Complex>(Complex, Complex)>;

//! S(u,v) = inverse(forward(u) + forward(v)); nullopt when the sum leaves
//! the image of the domain.
BinaryRule build_sum_rule(const Regraduator& reg);

//! Residual sweep outcome; escaped samples are excluded and counted.
struct SweepStats {
    double max_residual = 0.0;
    double mean_residual = 0.0;
    int evaluated = 0;
    int skipped = 0;
};

using Triple = std::array<Complex, 3>;

std::vector<Triple> sample_triples(const Regraduator& reg, int count, Rng& rng);

//! max/mean of |S(S(u,v),w) - S(u,S(v,w))| over the samples.
SweepStats check_sum_associativity(const BinaryRule& rule, const std::vector<Triple>& samples);

//! Constants of the power-map product representation zeta(u) = (A u)^C.
struct ProductRep {
    Complex scale;    // A, nonzero
    double exponent;  // C, nonzero real

    ProductRep(Complex scale_, double exponent_);
};

//! Product rule built from a ProductRep. The composed route evaluates
//! zeta_inv(zeta(u) zeta(v)) on the principal branch; it must agree with
//! the closed form A u v wherever the branch does not wrap.
class ProductRule {
public:
    explicit ProductRule(ProductRep rep) : rep_(rep) {}

    const ProductRep& rep() const { return rep_; }
    Complex zeta(Complex u) const;
    Complex zeta_inv(Complex z) const;
    Complex closed_form(Complex u, Complex v) const { return rep_.scale * u * v; }
    Complex via_composition(Complex u, Complex v) const;

    //! max/mean of |composition - closed form|; samples beyond
    //! `branch_tolerance` count as branch escapes (skipped).
    SweepStats branch_agreement(const std::vector<std::array<Complex, 2>>& samples,
                                double branch_tolerance = 1e-6) const;

private:
    ProductRep rep_;
};

ProductRule build_product_rule(const ProductRep& rep);

struct ProductConstraintResiduals {
    double associativity = 0.0;   // max |P(P(u,v),w) - P(u,P(v,w))|
    double distributivity = 0.0;  // max |P(u,v+w) - P(u,v) - P(u,w)|
};

ProductConstraintResiduals check_product_constraints(
    const std::function<Complex(Complex, Complex)>& rule, const std::vector<Triple>& samples);

// Negative controls: maps that deliberately violate one constraint each.
BinaryRule broken_sum_rule();                                        // u + v + u v^2
std::function<Complex(Complex, Complex)> broken_product_nondistributive(); // u + v
std::function<Complex(Complex, Complex)> broken_product_nonassociative();  // u v^2

//! Rewrite an assignment whose or-joins follow the sum rule of `reg` into
//! the plain additive form: psi = scale * forward(phi). Throws RuleViolation
//! when some joinable pair in the map (with its join also present) fails
//! the claimed rule by more than `tolerance`.
std::map<Setup, Complex> regraduate_assignment(const std::map<Setup, Complex>& phi_values,
                                               const Regraduator& reg, Complex scale,
                                               double tolerance = 1e-8);

} // namespace ampcalc

#endif
