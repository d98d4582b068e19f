#include "ampcalc/amplitude.hpp"

#include <limits>

namespace ampcalc {

namespace {

// Admissible sites at an interior time: the filter's holes, else all sites.
std::vector<int> admissible_sites(const Setup& setup, int t) {
    if (const Filter* f = setup.filter_at(t)) return f->open_sites();
    std::vector<int> all(static_cast<std::size_t>(setup.num_sites()));
    for (int s = 0; s < setup.num_sites(); ++s) all[static_cast<std::size_t>(s)] = s;
    return all;
}

} // namespace

std::uint64_t path_count(const Setup& setup) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 1;
    for (int t = setup.source().time + 1; t < setup.sink().time; ++t) {
        std::uint64_t branches = static_cast<std::uint64_t>(
            setup.filter_at(t) ? setup.filter_at(t)->open_sites().size()
                               : static_cast<std::size_t>(setup.num_sites()));
        if (branches != 0 && count > cap / branches) return cap;
        count *= branches;
    }
    return count;
}

Amplitude amplitude_paths(const Setup& setup, const StepKernel& kernel,
                          std::uint64_t budget) {
    if (kernel.num_sites() != setup.num_sites())
        throw Error(ErrorCode::GridMismatch, "kernel and setup grid sizes differ");
    const std::uint64_t total = path_count(setup);
    if (total > budget)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(total) + " paths exceed budget " + std::to_string(budget));

    const int t_start = setup.source().time;
    const int t_end = setup.sink().time;
    const int interior = t_end - t_start - 1;

    std::vector<std::vector<int>> slots(static_cast<std::size_t>(interior));
    for (int k = 0; k < interior; ++k)
        slots[static_cast<std::size_t>(k)] = admissible_sites(setup, t_start + 1 + k);

    // Odometer over intermediate sites, last slot fastest: paths appear in
    // lexicographic order (x_{t+1}, ..., x_{t_f - 1}) and the sum order is
    // fixed for bit reproducibility.
    std::vector<std::size_t> index(static_cast<std::size_t>(interior), 0);
    Amplitude sum = 0.0;
    while (true) {
        Amplitude term = 1.0;
        int prev_site = setup.source().site;
        for (int k = 0; k < interior; ++k) {
            int site = slots[static_cast<std::size_t>(k)][index[static_cast<std::size_t>(k)]];
            term *= kernel.at(t_start + k)(site, prev_site);
            prev_site = site;
        }
        term *= kernel.at(t_end - 1)(setup.sink().site, prev_site);
        sum += term;

        int k = interior - 1;
        while (k >= 0) {
            auto& i = index[static_cast<std::size_t>(k)];
            if (++i < slots[static_cast<std::size_t>(k)].size()) break;
            i = 0;
            --k;
        }
        if (k < 0) break;
    }
    return sum;
}

Amplitude amplitude_matrix(const Setup& setup, const StepKernel& kernel) {
    if (kernel.num_sites() != setup.num_sites())
        throw Error(ErrorCode::GridMismatch, "kernel and setup grid sizes differ");
    Vector state = Vector::Zero(setup.num_sites());
    state(setup.source().site) = 1.0;
    for (int t = setup.source().time; t < setup.sink().time; ++t) {
        state = kernel.at(t) * state;
        if (const Filter* f = setup.filter_at(t + 1)) {
            Vector masked = Vector::Zero(setup.num_sites());
            for (int s : f->open_sites()) masked(s) = state(s);
            state = std::move(masked);
        }
    }
    return state(setup.sink().site);
}

std::vector<std::pair<Setup, Setup>> slice_decompose(const Setup& setup, int t) {
    if (t <= setup.source().time || t >= setup.sink().time)
        throw Error(ErrorCode::TimeOutOfRange,
                    "slice time " + std::to_string(t) + " not strictly inside (" +
                        std::to_string(setup.source().time) + ", " +
                        std::to_string(setup.sink().time) + ")");
    const Grid grid(setup.num_sites());

    std::vector<Filter> before, after;
    for (const Filter& f : setup.filters()) {
        if (f.time() < t) before.push_back(f);
        if (f.time() > t) after.push_back(f);
    }

    std::vector<std::pair<Setup, Setup>> pairs;
    for (int site : admissible_sites(setup, t)) {
        Event junction{site, t};
        Setup later(grid, junction, after, setup.sink());
        Setup earlier(grid, setup.source(), before, junction);
        pairs.emplace_back(std::move(later), std::move(earlier));
    }
    return pairs;
}

double check_sum_rule(const Setup& a, const Setup& b, const StepKernel& kernel) {
    OrJoinResult joined = or_join(a, b);
    Amplitude whole = amplitude_matrix(joined.setup, kernel);
    Amplitude parts = amplitude_matrix(a, kernel) + amplitude_matrix(b, kernel);
    return std::abs(whole - parts);
}

double check_product_rule(const Setup& later, const Setup& earlier, const StepKernel& kernel) {
    Setup composed = and_compose(later, earlier);
    Amplitude whole = amplitude_matrix(composed, kernel);
    Amplitude parts = amplitude_matrix(later, kernel) * amplitude_matrix(earlier, kernel);
    return std::abs(whole - parts);
}

} // namespace ampcalc
