// Surface syntax for setup expressions.
//
//   expr    := term { "|" term }
//   term    := atom { "*" atom }          left operand is the LATER setup
//   atom    := setup | "(" expr ")"
//   setup   := "[" event { "," filter } "," event "]"
//   event   := "(" int "," int ")"        (site, time), later event first
//   filter  := "{" "t" "=" int ":" int { "," int } "}"
//
// Example: "[(0,2),{t=1:0},(0,0)] | [(0,2),{t=1:1},(0,0)]".
// Leaves keep their literal content (filters and holes in written order);
// validation against a grid happens at evaluation time, with every error
// carrying the source position of the subexpression that caused it.

#ifndef AMPCALC_SETUP_EXPR_HPP
#define AMPCALC_SETUP_EXPR_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ampcalc/algebra.hpp"
#include "ampcalc/lattice.hpp"

namespace ampcalc {

struct SourcePos {
    int line = 1;
    int column = 1;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                             ": " + message),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

//! A lattice/algebra error annotated with where in the expression it arose.
class EvalError : public Error {
public:
    EvalError(SourcePos pos, const Error& cause)
        : Error(cause.code(), std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                                  ": " + cause.what()),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

struct SetupExpr;
using SetupExprPtr = std::shared_ptr<const SetupExpr>;

//! Literal filter as written: time plus holes in source order.
struct FilterLiteral {
    int time = 0;
    std::vector<int> holes;

    friend bool operator==(const FilterLiteral&, const FilterLiteral&) = default;
};

//! Setup literal as written: later event first.
struct SetupLiteral {
    Event sink;
    std::vector<FilterLiteral> filters;
    Event source;

    friend bool operator==(const SetupLiteral&, const SetupLiteral&) = default;
};

struct AndNode {
    SetupExprPtr later;
    SetupExprPtr earlier;
};

struct OrNode {
    SetupExprPtr left;
    SetupExprPtr right;
};

struct SetupExpr {
    SourcePos pos;
    std::variant<SetupLiteral, AndNode, OrNode> node;
};

//! Structural equality, ignoring source positions.
bool equal(const SetupExpr& a, const SetupExpr& b);

SetupExprPtr parse_setup_expr(const std::string& text);

//! Canonical text that re-parses to an equal AST.
std::string print_setup_expr(const SetupExpr& expr);

//! Bottom-up evaluation with and_compose / or_join; throws EvalError.
Setup eval_setup_expr(const SetupExpr& expr, const Grid& grid);

//! Largest site index mentioned anywhere in the expression (events or holes).
int max_referenced_site(const SetupExpr& expr);

} // namespace ampcalc

#endif
