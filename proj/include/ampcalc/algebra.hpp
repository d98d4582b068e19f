// Partial `and` / `or` connectives on setups.
//
// `and` places two setups in immediate succession: the sink of the earlier
// operand must coincide with the source of the later one, and the junction
// becomes an explicit single-hole filter in the combined setup. `and` is
// never commutative: if (later, earlier) composes, the swapped call cannot.
//
// `or` merges two setups that are identical except at one single filter
// whose hole sets are disjoint; the result opens the union of both hole
// sets. `or` is commutative and associative where defined.

#ifndef AMPCALC_ALGEBRA_HPP
#define AMPCALC_ALGEBRA_HPP

#include "ampcalc/lattice.hpp"

namespace ampcalc {

//! Records the unique filter time at which two or-joined setups differed.
struct JoinWitness {
    int filter_time = 0;
};

struct OrJoinResult {
    Setup setup;
    JoinWitness witness;
};

//! later ∘ earlier, sharing the junction event earlier.sink == later.source.
//! Throws JunctionMismatch when the operands are not consecutive.
Setup and_compose(const Setup& later, const Setup& earlier);

//! Merge two setups differing only at one filter with disjoint holes.
//! Throws NotJoinable / OverlappingHoles otherwise.
OrJoinResult or_join(const Setup& a, const Setup& b);

bool is_and_allowed(const Setup& later, const Setup& earlier);
bool is_or_allowed(const Setup& a, const Setup& b);

} // namespace ampcalc

#endif
