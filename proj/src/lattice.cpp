#include "ampcalc/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace ampcalc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidTimeOrder: return "InvalidTimeOrder";
        case ErrorCode::DuplicateFilterTime: return "DuplicateFilterTime";
        case ErrorCode::EmptyFilter: return "EmptyFilter";
        case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::JunctionMismatch: return "JunctionMismatch";
        case ErrorCode::NotJoinable: return "NotJoinable";
        case ErrorCode::OverlappingHoles: return "OverlappingHoles";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TimeOutOfRange: return "TimeOutOfRange";
        case ErrorCode::SingularFamily: return "SingularFamily";
        case ErrorCode::RuleViolation: return "RuleViolation";
        case ErrorCode::BadKernel: return "BadKernel";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "UnknownError";
}

Filter::Filter(const Grid& grid, int time, std::vector<int> open_sites)
    : time_(time), open_sites_(std::move(open_sites)) {
    if (open_sites_.empty())
        throw Error(ErrorCode::EmptyFilter,
                    "filter at t=" + std::to_string(time_) + " has no open sites");
    std::sort(open_sites_.begin(), open_sites_.end());
    if (std::adjacent_find(open_sites_.begin(), open_sites_.end()) != open_sites_.end())
        throw Error(ErrorCode::BadInput,
                    "filter at t=" + std::to_string(time_) + " lists a hole twice");
    for (int site : open_sites_)
        if (!grid.contains_site(site))
            throw Error(ErrorCode::SiteOutOfRange,
                        "hole at site " + std::to_string(site) + " outside grid of " +
                            std::to_string(grid.num_sites) + " sites");
}

bool Filter::is_open(int site) const {
    return std::binary_search(open_sites_.begin(), open_sites_.end(), site);
}

Setup::Setup(const Grid& grid, Event source, std::vector<Filter> filters, Event sink)
    : num_sites_(grid.num_sites), source_(source), sink_(sink), filters_(std::move(filters)) {
    if (!grid.contains_site(source_.site))
        throw Error(ErrorCode::SiteOutOfRange,
                    "source site " + std::to_string(source_.site) + " outside grid");
    if (!grid.contains_site(sink_.site))
        throw Error(ErrorCode::SiteOutOfRange,
                    "sink site " + std::to_string(sink_.site) + " outside grid");
    if (source_.time >= sink_.time)
        throw Error(ErrorCode::InvalidTimeOrder,
                    "source time " + std::to_string(source_.time) +
                        " not before sink time " + std::to_string(sink_.time));
    std::stable_sort(filters_.begin(), filters_.end(),
                     [](const Filter& a, const Filter& b) { return a.time() < b.time(); });
    for (std::size_t i = 0; i < filters_.size(); ++i) {
        int t = filters_[i].time();
        if (t <= source_.time || t >= sink_.time)
            throw Error(ErrorCode::InvalidTimeOrder,
                        "filter time " + std::to_string(t) + " outside open interval (" +
                            std::to_string(source_.time) + ", " + std::to_string(sink_.time) + ")");
        if (i > 0 && filters_[i - 1].time() == t)
            throw Error(ErrorCode::DuplicateFilterTime,
                        "two filters at t=" + std::to_string(t));
    }
}

const Filter* Setup::filter_at(int time) const {
    for (const Filter& f : filters_)
        if (f.time() == time) return &f;
    return nullptr;
}

Setup make_setup(const Grid& grid, Event source, std::vector<Filter> filters, Event sink) {
    return Setup(grid, source, std::move(filters), sink);
}

Filter full_filter(const Grid& grid, int time) {
    std::vector<int> all(static_cast<std::size_t>(grid.num_sites));
    for (int s = 0; s < grid.num_sites; ++s) all[static_cast<std::size_t>(s)] = s;
    return Filter(grid, time, std::move(all));
}

std::string to_string(const Setup& setup) {
    std::ostringstream out;
    out << "[(" << setup.sink().site << "," << setup.sink().time << ")";
    const auto& fs = setup.filters();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        out << ",{t=" << it->time() << ":";
        const auto& holes = it->open_sites();
        for (std::size_t i = 0; i < holes.size(); ++i) {
            if (i) out << ",";
            out << holes[i];
        }
        out << "}";
    }
    out << ",(" << setup.source().site << "," << setup.source().time << ")]";
    return out.str();
}

} // namespace ampcalc
