#include "ampcalc/regraduation.hpp"

#include <cmath>
#include <numbers>

#include "ampcalc/algebra.hpp"
#include "ampcalc/errors.hpp"

namespace ampcalc {

Regraduator identity_regraduator() {
    return Regraduator{
        "identity",
        [](Complex u) { return u; },
        [](Complex w) { return w; },
        [](Complex) { return true; },
        [](Rng& rng) { return rng.complex_in_disk(1.0); },
    };
}

Regraduator linear_regraduator(Complex scale) {
    if (scale == Complex(0.0))
        throw Error(ErrorCode::BadInput, "linear regraduator needs a nonzero scale");
    return Regraduator{
        "linear",
        [scale](Complex u) { return scale * u; },
        [scale](Complex w) { return w / scale; },
        [](Complex) { return true; },
        [](Rng& rng) { return rng.complex_in_disk(1.0); },
    };
}

Regraduator odd_power_regraduator(int k) {
    if (k < 1)
        throw Error(ErrorCode::BadInput, "odd power regraduator needs k >= 1");
    const double power = 2.0 * k + 1.0;
    // Domain: sector |arg u| < pi/(2*power), so images fill the open right
    // half plane, which is closed under addition; the principal root maps
    // back into the sector.
    return Regraduator{
        "power" + std::to_string(2 * k + 1),
        [power](Complex u) { return std::pow(u, power); },
        [power](Complex w) { return std::pow(w, 1.0 / power); },
        [](Complex w) { return w.real() > 0.0; },
        [power](Rng& rng) {
            double radius = rng.uniform(0.3, 1.2);
            double angle = rng.uniform(-0.99, 0.99) * std::numbers::pi / (2.0 * power);
            return std::polar(radius, angle);
        },
    };
}

BinaryRule build_sum_rule(const Regraduator& reg) {
    return [forward = reg.forward, inverse = reg.inverse,
            in_image = reg.in_image](Complex u, Complex v) -> std::optional<Complex> {
        Complex w = forward(u) + forward(v);
        if (!in_image(w)) return std::nullopt;
        return inverse(w);
    };
}

std::vector<Triple> sample_triples(const Regraduator& reg, int count, Rng& rng) {
    std::vector<Triple> triples;
    triples.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        triples.push_back(
            {reg.sample_domain(rng), reg.sample_domain(rng), reg.sample_domain(rng)});
    return triples;
}

SweepStats check_sum_associativity(const BinaryRule& rule, const std::vector<Triple>& samples) {
    SweepStats stats;
    double total = 0.0;
    for (const Triple& s : samples) {
        auto left = [&]() -> std::optional<Complex> {
            auto uv = rule(s[0], s[1]);
            if (!uv) return std::nullopt;
            return rule(*uv, s[2]);
        }();
        auto right = [&]() -> std::optional<Complex> {
            auto vw = rule(s[1], s[2]);
            if (!vw) return std::nullopt;
            return rule(s[0], *vw);
        }();
        if (!left || !right) {
            ++stats.skipped;
            continue;
        }
        double r = std::abs(*left - *right);
        stats.max_residual = std::max(stats.max_residual, r);
        total += r;
        ++stats.evaluated;
    }
    if (stats.evaluated > 0) stats.mean_residual = total / stats.evaluated;
    return stats;
}

ProductRep::ProductRep(Complex scale_, double exponent_) : scale(scale_), exponent(exponent_) {
    if (scale == Complex(0.0))
        throw Error(ErrorCode::BadInput, "product representation needs nonzero scale");
    if (exponent == 0.0)
        throw Error(ErrorCode::BadInput, "product representation needs nonzero exponent");
}

Complex ProductRule::zeta(Complex u) const {
    return std::pow(rep_.scale * u, Complex(rep_.exponent));
}

Complex ProductRule::zeta_inv(Complex z) const {
    return std::pow(z, Complex(1.0 / rep_.exponent)) / rep_.scale;
}

Complex ProductRule::via_composition(Complex u, Complex v) const {
    return zeta_inv(zeta(u) * zeta(v));
}

SweepStats ProductRule::branch_agreement(const std::vector<std::array<Complex, 2>>& samples,
                                         double branch_tolerance) const {
    SweepStats stats;
    double total = 0.0;
    for (const auto& s : samples) {
        double r = std::abs(via_composition(s[0], s[1]) - closed_form(s[0], s[1]));
        if (!(r <= branch_tolerance)) {
            ++stats.skipped; // principal branch wrapped for this sample
            continue;
        }
        stats.max_residual = std::max(stats.max_residual, r);
        total += r;
        ++stats.evaluated;
    }
    if (stats.evaluated > 0) stats.mean_residual = total / stats.evaluated;
    return stats;
}

ProductRule build_product_rule(const ProductRep& rep) { return ProductRule(rep); }

ProductConstraintResiduals check_product_constraints(
    const std::function<Complex(Complex, Complex)>& rule, const std::vector<Triple>& samples) {
    ProductConstraintResiduals res;
    for (const Triple& s : samples) {
        double assoc = std::abs(rule(rule(s[0], s[1]), s[2]) - rule(s[0], rule(s[1], s[2])));
        double distrib =
            std::abs(rule(s[0], s[1] + s[2]) - rule(s[0], s[1]) - rule(s[0], s[2]));
        res.associativity = std::max(res.associativity, assoc);
        res.distributivity = std::max(res.distributivity, distrib);
    }
    return res;
}

BinaryRule broken_sum_rule() {
    return [](Complex u, Complex v) -> std::optional<Complex> { return u + v + u * v * v; };
}

std::function<Complex(Complex, Complex)> broken_product_nondistributive() {
    return [](Complex u, Complex v) { return u + v; };
}

std::function<Complex(Complex, Complex)> broken_product_nonassociative() {
    return [](Complex u, Complex v) { return u * v * v; };
}

std::map<Setup, Complex> regraduate_assignment(const std::map<Setup, Complex>& phi_values,
                                               const Regraduator& reg, Complex scale,
                                               double tolerance) {
    // S-consistency of the input is equivalent to additivity of forward(phi)
    // over every joinable pair whose join is also assigned.
    for (auto a = phi_values.begin(); a != phi_values.end(); ++a) {
        for (auto b = std::next(a); b != phi_values.end(); ++b) {
            if (!is_or_allowed(a->first, b->first)) continue;
            auto joined = phi_values.find(or_join(a->first, b->first).setup);
            if (joined == phi_values.end()) continue;
            Complex gap =
                reg.forward(joined->second) - reg.forward(a->second) - reg.forward(b->second);
            if (std::abs(gap) > tolerance)
                throw Error(ErrorCode::RuleViolation,
                            "assignment violates the claimed sum rule at " +
                                to_string(joined->first) + " (gap " +
                                std::to_string(std::abs(gap)) + ")");
        }
    }
    std::map<Setup, Complex> psi_values;
    for (const auto& [setup, phi] : phi_values)
        psi_values.emplace(setup, scale * reg.forward(phi));
    return psi_values;
}

} // namespace ampcalc
