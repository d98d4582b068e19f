#include "ampcalc/generators.hpp"

#include <algorithm>

#include "ampcalc/errors.hpp"

namespace ampcalc {

namespace {

std::vector<int> random_hole_subset(int num_sites, Rng& rng) {
    std::vector<int> holes;
    for (int s = 0; s < num_sites; ++s)
        if (rng.coin()) holes.push_back(s);
    if (holes.empty()) holes.push_back(rng.uniform_int(0, num_sites - 1));
    return holes;
}

//! `count` distinct values from [lo, hi], sorted (partial Fisher-Yates).
std::vector<int> distinct_values(int lo, int hi, int count, Rng& rng) {
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) pool.push_back(v);
    for (int i = 0; i < count; ++i)
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(
                      rng.uniform_int(i, static_cast<int>(pool.size()) - 1))]);
    std::vector<int> chosen(pool.begin(), pool.begin() + count);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

//! Up to max_filters random filters at distinct times inside (t_from, t_to).
std::vector<Filter> random_filters(const Grid& grid, int t_from, int t_to, int max_filters,
                                   Rng& rng) {
    std::vector<Filter> filters;
    const int interior = t_to - t_from - 1;
    if (interior <= 0 || max_filters <= 0) return filters;
    const int want = rng.uniform_int(0, std::min(max_filters, interior));
    if (want == 0) return filters;
    for (int t : distinct_values(t_from + 1, t_to - 1, want, rng))
        filters.emplace_back(grid, t, random_hole_subset(grid.num_sites, rng));
    return filters;
}

//! Split `holes` into `parts` disjoint nonempty groups.
std::vector<std::vector<int>> split_holes(const std::vector<int>& holes, int parts, Rng& rng) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(parts));
    // Seed each group with one hole, then scatter the rest.
    for (int i = 0; i < parts; ++i)
        groups[static_cast<std::size_t>(i)].push_back(holes[static_cast<std::size_t>(i)]);
    for (std::size_t i = static_cast<std::size_t>(parts); i < holes.size(); ++i)
        groups[static_cast<std::size_t>(rng.uniform_int(0, parts - 1))].push_back(holes[i]);
    return groups;
}

Event random_event(const Grid& grid, int time, Rng& rng) {
    return Event{rng.uniform_int(0, grid.num_sites - 1), time};
}

} // namespace

Setup random_setup(const SetupGenOptions& opts, Rng& rng) {
    const Grid grid(opts.num_sites);
    const int t0 = rng.uniform_int(-2, 2);
    const int steps = rng.uniform_int(1, opts.max_steps);
    Event source = random_event(grid, t0, rng);
    Event sink = random_event(grid, t0 + steps, rng);
    return Setup(grid, source, random_filters(grid, t0, t0 + steps, opts.max_filters, rng),
                 sink);
}

namespace {

//! Base frame plus a partition of one filter's holes into `parts` variants.
std::vector<Setup> joinable_family(const SetupGenOptions& opts, int parts, Rng& rng) {
    if (opts.num_sites < parts)
        throw Error(ErrorCode::BadInput,
                    "joinable family of " + std::to_string(parts) + " needs at least " +
                        std::to_string(parts) + " sites");
    const Grid grid(opts.num_sites);
    const int t0 = rng.uniform_int(-2, 2);
    const int steps = rng.uniform_int(2, std::max(2, opts.max_steps));
    Event source = random_event(grid, t0, rng);
    Event sink = random_event(grid, t0 + steps, rng);

    const int join_time = rng.uniform_int(t0 + 1, t0 + steps - 1);
    const int join_holes = rng.uniform_int(parts, grid.num_sites);
    std::vector<int> holes = distinct_values(0, grid.num_sites - 1, join_holes, rng);
    std::vector<std::vector<int>> groups = split_holes(holes, parts, rng);

    // Shared filters at the remaining interior times.
    std::vector<Filter> shared;
    for (Filter& f :
         random_filters(grid, t0, t0 + steps, opts.max_filters, rng))
        if (f.time() != join_time) shared.push_back(std::move(f));

    std::vector<Setup> family;
    family.reserve(static_cast<std::size_t>(parts));
    for (int i = 0; i < parts; ++i) {
        std::vector<Filter> filters = shared;
        filters.emplace_back(grid, join_time, groups[static_cast<std::size_t>(i)]);
        family.emplace_back(grid, source, std::move(filters), sink);
    }
    return family;
}

//! Consecutive segments meeting at `junctions` shared events, latest first.
std::vector<Setup> chain_family(const SetupGenOptions& opts, int segments, Rng& rng) {
    const Grid grid(opts.num_sites);
    const int t0 = rng.uniform_int(-2, 2);
    const int steps = rng.uniform_int(segments, std::max(segments, opts.max_steps));
    std::vector<int> cut_times =
        distinct_values(t0 + 1, t0 + steps - 1, segments - 1, rng);

    std::vector<Event> nodes;
    nodes.push_back(random_event(grid, t0, rng));
    for (int t : cut_times) nodes.push_back(random_event(grid, t, rng));
    nodes.push_back(random_event(grid, t0 + steps, rng));

    std::vector<Setup> family; // latest segment first
    for (int i = segments - 1; i >= 0; --i) {
        const Event& from = nodes[static_cast<std::size_t>(i)];
        const Event& to = nodes[static_cast<std::size_t>(i + 1)];
        family.emplace_back(grid, from,
                            random_filters(grid, from.time, to.time, opts.max_filters, rng),
                            to);
    }
    return family;
}

} // namespace

std::pair<Setup, Setup> random_joinable_pair(const SetupGenOptions& opts, Rng& rng) {
    std::vector<Setup> family = joinable_family(opts, 2, rng);
    return {std::move(family[0]), std::move(family[1])};
}

std::array<Setup, 3> random_joinable_triple(const SetupGenOptions& opts, Rng& rng) {
    std::vector<Setup> family = joinable_family(opts, 3, rng);
    return {std::move(family[0]), std::move(family[1]), std::move(family[2])};
}

std::pair<Setup, Setup> random_chainable_pair(const SetupGenOptions& opts, Rng& rng) {
    std::vector<Setup> family = chain_family(opts, 2, rng);
    return {std::move(family[0]), std::move(family[1])};
}

std::array<Setup, 3> random_chainable_triple(const SetupGenOptions& opts, Rng& rng) {
    std::vector<Setup> family = chain_family(opts, 3, rng);
    return {std::move(family[0]), std::move(family[1]), std::move(family[2])};
}

DistributiveFamily random_distributive_family(const SetupGenOptions& opts, Rng& rng,
                                              bool solo_is_later) {
    if (opts.num_sites < 2)
        throw Error(ErrorCode::BadInput, "distributive family needs at least 2 sites");
    const Grid grid(opts.num_sites);
    const int t0 = rng.uniform_int(-2, 2);
    // Pair window needs an interior filter time, solo window one step.
    const int steps = rng.uniform_int(3, std::max(3, opts.max_steps));
    const int junction_time =
        solo_is_later ? rng.uniform_int(t0 + 2, t0 + steps - 1)
                      : rng.uniform_int(t0 + 1, t0 + steps - 2);
    Event junction = random_event(grid, junction_time, rng);

    SetupGenOptions pair_opts = opts;
    Rng* r = &rng;
    auto make_pair_on = [&](Event from, Event to) {
        const int join_time = r->uniform_int(from.time + 1, to.time - 1);
        const int join_holes = r->uniform_int(2, grid.num_sites);
        std::vector<int> holes = distinct_values(0, grid.num_sites - 1, join_holes, *r);
        auto groups = split_holes(holes, 2, *r);
        std::vector<Filter> shared;
        for (Filter& f : random_filters(grid, from.time, to.time, pair_opts.max_filters, *r))
            if (f.time() != join_time) shared.push_back(std::move(f));
        std::vector<Filter> fa = shared;
        fa.emplace_back(grid, join_time, groups[0]);
        std::vector<Filter> fb = std::move(shared);
        fb.emplace_back(grid, join_time, groups[1]);
        return std::pair<Setup, Setup>{Setup(grid, from, std::move(fa), to),
                                       Setup(grid, from, std::move(fb), to)};
    };

    DistributiveFamily out{Setup(grid, Event{0, 0}, {}, Event{0, 1}),
                           Setup(grid, Event{0, 0}, {}, Event{0, 1}),
                           Setup(grid, Event{0, 0}, {}, Event{0, 1}), solo_is_later};
    Event source = random_event(grid, t0, rng);
    Event sink = random_event(grid, t0 + steps, rng);
    if (solo_is_later) {
        auto [left, right] = make_pair_on(source, junction);
        out.solo = Setup(grid, junction,
                         random_filters(grid, junction.time, sink.time, opts.max_filters, rng),
                         sink);
        out.left = std::move(left);
        out.right = std::move(right);
    } else {
        auto [left, right] = make_pair_on(junction, sink);
        out.solo = Setup(grid, source,
                         random_filters(grid, source.time, junction.time, opts.max_filters, rng),
                         junction);
        out.left = std::move(left);
        out.right = std::move(right);
    }
    return out;
}

} // namespace ampcalc
