#include "ampcalc/algebra.hpp"

#include <algorithm>

namespace ampcalc {

Setup and_compose(const Setup& later, const Setup& earlier) {
    if (later.num_sites() != earlier.num_sites())
        throw Error(ErrorCode::GridMismatch, "operands live on different grids");
    if (earlier.sink() != later.source())
        throw Error(ErrorCode::JunctionMismatch,
                    "sink of earlier " + to_string(earlier) + " is not the source of later " +
                        to_string(later) + "; the combined proposition is not allowed");

    const Grid grid(later.num_sites());
    const Event junction = later.source();

    // Everything earlier happens before the junction and everything later
    // after it (guaranteed by the Setup invariants), so the union of filter
    // lists plus the one-hole junction filter is itself a valid setup.
    std::vector<Filter> filters = earlier.filters();
    filters.emplace_back(grid, junction.time, std::vector<int>{junction.site});
    filters.insert(filters.end(), later.filters().begin(), later.filters().end());
    return Setup(grid, earlier.source(), std::move(filters), later.sink());
}

bool is_and_allowed(const Setup& later, const Setup& earlier) {
    return later.num_sites() == earlier.num_sites() && earlier.sink() == later.source();
}

namespace {

// Times at which the two filter lists differ; requires equal time sets first.
struct JoinAnalysis {
    bool same_frame = false;     // sources, sinks, grid, filter-time sets all equal
    int differing_times = 0;
    int join_time = 0;           // meaningful when differing_times == 1
    bool holes_disjoint = false; // at join_time
};

JoinAnalysis analyze_join(const Setup& a, const Setup& b) {
    JoinAnalysis r;
    if (a.num_sites() != b.num_sites()) return r;
    if (a.source() != b.source() || a.sink() != b.sink()) return r;
    if (a.filters().size() != b.filters().size()) return r;
    for (std::size_t i = 0; i < a.filters().size(); ++i)
        if (a.filters()[i].time() != b.filters()[i].time()) return r;
    r.same_frame = true;
    for (std::size_t i = 0; i < a.filters().size(); ++i) {
        const Filter& fa = a.filters()[i];
        const Filter& fb = b.filters()[i];
        if (fa.open_sites() == fb.open_sites()) continue;
        ++r.differing_times;
        r.join_time = fa.time();
        const auto& ha = fa.open_sites();
        const auto& hb = fb.open_sites();
        std::vector<int> common;
        std::set_intersection(ha.begin(), ha.end(), hb.begin(), hb.end(),
                              std::back_inserter(common));
        r.holes_disjoint = common.empty();
    }
    return r;
}

} // namespace

OrJoinResult or_join(const Setup& a, const Setup& b) {
    if (a.num_sites() != b.num_sites())
        throw Error(ErrorCode::GridMismatch, "operands live on different grids");
    JoinAnalysis j = analyze_join(a, b);
    if (!j.same_frame)
        throw Error(ErrorCode::NotJoinable,
                    "setups do not share source, sink and filter times: " + to_string(a) +
                        " vs " + to_string(b));
    if (j.differing_times == 0) {
        // Identical setups: whichever filter one nominates as the join point,
        // its holes coincide, so they overlap. Elementary identical setups
        // have no filter to join at in the first place.
        if (a.filters().empty())
            throw Error(ErrorCode::NotJoinable,
                        "identical elementary setups have no filter to join at");
        throw Error(ErrorCode::OverlappingHoles,
                    "identical hole sets at every filter of " + to_string(a));
    }
    if (j.differing_times > 1)
        throw Error(ErrorCode::NotJoinable,
                    "setups differ at " + std::to_string(j.differing_times) +
                        " filters; exactly one is required");
    if (!j.holes_disjoint)
        throw Error(ErrorCode::OverlappingHoles,
                    "hole sets at t=" + std::to_string(j.join_time) + " intersect");

    const Grid grid(a.num_sites());
    std::vector<Filter> filters;
    filters.reserve(a.filters().size());
    for (std::size_t i = 0; i < a.filters().size(); ++i) {
        const Filter& fa = a.filters()[i];
        if (fa.time() != j.join_time) {
            filters.push_back(fa);
            continue;
        }
        std::vector<int> merged = fa.open_sites();
        const auto& hb = b.filters()[i].open_sites();
        merged.insert(merged.end(), hb.begin(), hb.end());
        filters.emplace_back(grid, fa.time(), std::move(merged));
    }
    return OrJoinResult{Setup(grid, a.source(), std::move(filters), a.sink()),
                        JoinWitness{j.join_time}};
}

bool is_or_allowed(const Setup& a, const Setup& b) {
    JoinAnalysis j = analyze_join(a, b);
    return j.same_frame && j.differing_times == 1 && j.holes_disjoint;
}

} // namespace ampcalc
