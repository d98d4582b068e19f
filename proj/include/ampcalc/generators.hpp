// Seeded families of random setups for the property sweeps.
//
// Allowed compositions are rare under uniform sampling, so every family is
// built by construction: chainable pairs share an explicit junction,
// joinable pairs split one filter's holes into disjoint parts. All draws
// run through Rng, so a seed pins the whole family.

#ifndef AMPCALC_GENERATORS_HPP
#define AMPCALC_GENERATORS_HPP

#include <array>
#include <utility>

#include "ampcalc/lattice.hpp"
#include "ampcalc/random.hpp"

namespace ampcalc {

struct SetupGenOptions {
    int num_sites = 3;
    int max_steps = 5;   // sink.time - source.time drawn from [1, max_steps]
    int max_filters = 3;
};

Setup random_setup(const SetupGenOptions& opts, Rng& rng);

//! (a, b) with or_join(a, b) allowed. Needs num_sites >= 2.
std::pair<Setup, Setup> random_joinable_pair(const SetupGenOptions& opts, Rng& rng);

//! Pairwise-disjoint holes at one shared filter. Needs num_sites >= 3.
std::array<Setup, 3> random_joinable_triple(const SetupGenOptions& opts, Rng& rng);

//! (later, earlier) with and_compose(later, earlier) allowed.
std::pair<Setup, Setup> random_chainable_pair(const SetupGenOptions& opts, Rng& rng);

//! (a, b, c) consecutive, a latest: ab, bc and abc all allowed.
std::array<Setup, 3> random_chainable_triple(const SetupGenOptions& opts, Rng& rng);

//! A factor `solo` adjacent to a joinable pair (left, right): when
//! solo_is_later, solo(left v right) and its expansion are all allowed;
//! otherwise (left v right)solo. Needs num_sites >= 2.
struct DistributiveFamily {
    Setup solo;
    Setup left;
    Setup right;
    bool solo_is_later = true;
};

DistributiveFamily random_distributive_family(const SetupGenOptions& opts, Rng& rng,
                                              bool solo_is_later);

} // namespace ampcalc

#endif
