// Error taxonomy shared by the lattice, algebra and engine layers.

#ifndef AMPCALC_ERRORS_HPP
#define AMPCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ampcalc {

enum class ErrorCode {
    InvalidTimeOrder,    // source/sink/filter times out of order
    DuplicateFilterTime, // two filters at the same time index
    EmptyFilter,         // filter with no open sites
    SiteOutOfRange,      // site index outside [0, num_sites)
    GridMismatch,        // operands live on different grids
    JunctionMismatch,    // and-composition: sink of earlier != source of later
    NotJoinable,         // or-join: operands are not joinable at a single filter
    OverlappingHoles,    // or-join: hole sets at the join filter intersect
    BudgetExceeded,      // path enumeration would exceed the path budget
    TimeOutOfRange,      // slice time outside the open (source, sink) interval
    SingularFamily,      // kernel too far from identity for derivative extraction
    RuleViolation,       // input assignment violates its claimed combination rule
    BadKernel,           // malformed kernel (size mismatch, missing step, non-finite)
    BadInput,            // malformed file or argument
};

const char* error_code_name(ErrorCode code);

//! Exception carrying a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace ampcalc

#endif
