// Two independent amplitude engines plus the combination-rule checks.
//
// amplitude_paths sums the product of one-step kernel entries over every
// site path compatible with the setup's filters (exhaustive, deterministic
// lexicographic order) and serves as the oracle. amplitude_matrix evaluates
// the same number by propagating through the step matrices with a 0/1
// diagonal projection at every filter time. The two must agree within
// floating-point tolerance for any kernel, unitary or not: that agreement,
// together with the sum/product-rule residuals below, is the consistency
// property the whole library is about.

#ifndef AMPCALC_AMPLITUDE_HPP
#define AMPCALC_AMPLITUDE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ampcalc/algebra.hpp"
#include "ampcalc/kernel.hpp"
#include "ampcalc/lattice.hpp"

namespace ampcalc {

using Amplitude = Complex;

inline constexpr std::uint64_t kDefaultPathBudget = 1'000'000;

//! Number of site paths the exhaustive engine would enumerate
//! (saturates at uint64 max).
std::uint64_t path_count(const Setup& setup);

//! Exhaustive path sum in lexicographic path order.
//! Throws BudgetExceeded when path_count(setup) > budget.
Amplitude amplitude_paths(const Setup& setup, const StepKernel& kernel,
                          std::uint64_t budget = kDefaultPathBudget);

//! Projected matrix propagation; agrees with amplitude_paths within
//! numerical tolerance.
Amplitude amplitude_matrix(const Setup& setup, const StepKernel& kernel);

//! One (later, earlier) pair per admissible intermediate site at time t:
//! the original filter's holes when one exists at t, all sites otherwise.
//! Or-joining the compositions over all pairs reconstructs the setup (with
//! a full filter at t when there was none).
std::vector<std::pair<Setup, Setup>> slice_decompose(const Setup& setup, int t);

//! |amp(a v b) - amp(a) - amp(b)|, matrix engine. Propagates NotJoinable.
double check_sum_rule(const Setup& a, const Setup& b, const StepKernel& kernel);

//! |amp(later earlier) - amp(later) amp(earlier)|. Propagates JunctionMismatch.
double check_product_rule(const Setup& later, const Setup& earlier, const StepKernel& kernel);

} // namespace ampcalc

#endif
