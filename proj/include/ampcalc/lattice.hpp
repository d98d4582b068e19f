// Discrete spacetime arena: grid, events, filters and the Setup proposition.
//
// A Setup is the idealized experiment "particle emitted at the source event,
// passes the open holes of every intermediate filter, detected at the sink
// event". All types are immutable value types, canonical on construction:
// filters sorted by time, hole lists sorted and deduplicated, every index
// validated against the grid. Invalid input throws; nothing is normalized
// silently.

#ifndef AMPCALC_LATTICE_HPP
#define AMPCALC_LATTICE_HPP

#include <compare>
#include <string>
#include <vector>

#include "ampcalc/errors.hpp"

namespace ampcalc {

//! 1D spatial lattice; time is an unbounded integer step index.
struct Grid {
    int num_sites = 1;

    explicit Grid(int num_sites_) : num_sites(num_sites_) {
        if (num_sites < 1)
            throw Error(ErrorCode::BadInput, "grid needs at least one site");
    }

    bool contains_site(int site) const { return site >= 0 && site < num_sites; }
};

//! A spacetime point (site, time).
struct Event {
    int site = 0;
    int time = 0;

    friend auto operator<=>(const Event&, const Event&) = default;
};

//! An instantaneous screen at one time, opaque except at `open_sites`.
class Filter {
public:
    //! Holes may be given in any order; they are sorted and must be distinct.
    Filter(const Grid& grid, int time, std::vector<int> open_sites);

    int time() const { return time_; }
    const std::vector<int>& open_sites() const { return open_sites_; } // sorted
    bool is_open(int site) const;

    friend auto operator<=>(const Filter&, const Filter&) = default;

private:
    int time_;
    std::vector<int> open_sites_;
};

//! Source event, ordered intermediate filters, sink event.
class Setup {
public:
    Setup(const Grid& grid, Event source, std::vector<Filter> filters, Event sink);

    int num_sites() const { return num_sites_; }
    const Event& source() const { return source_; }
    const Event& sink() const { return sink_; }
    const std::vector<Filter>& filters() const { return filters_; } // time-ascending
    int num_steps() const { return sink_.time - source_.time; }

    //! Filter at time t, or nullptr when the slice is unobstructed.
    const Filter* filter_at(int time) const;

    friend auto operator<=>(const Setup&, const Setup&) = default;

private:
    int num_sites_;
    Event source_;
    Event sink_;
    std::vector<Filter> filters_;
};

//! Validating constructor for Setup; filters may arrive in any order.
Setup make_setup(const Grid& grid, Event source, std::vector<Filter> filters, Event sink);

//! Filter at `time` with every site of the grid open.
Filter full_filter(const Grid& grid, int time);

//! Render in the surface syntax: [(site,time),{t=..:h,..},..,(site,time)],
//! later event first, filters in descending time order.
std::string to_string(const Setup& setup);

} // namespace ampcalc

#endif
