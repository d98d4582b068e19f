#include "ampcalc/setup_expr.hpp"

#include <cctype>
#include <sstream>

namespace ampcalc {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    SetupExprPtr parse() {
        skip_ws();
        SetupExprPtr expr = parse_expr();
        skip_ws();
        if (!at_end())
            fail("unexpected trailing input starting with " + describe_here());
        return expr;
    }

private:
    const std::string& text_;
    std::size_t offset_ = 0;
    SourcePos pos_;

    bool at_end() const { return offset_ >= text_.size(); }
    char peek() const { return text_[offset_]; }

    void advance() {
        if (text_[offset_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++offset_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(pos_, message);
    }

    std::string describe_here() const {
        if (at_end()) return "end of input";
        return std::string("'") + peek() + "'";
    }

    void expect(char c) {
        if (at_end() || peek() != c)
            fail(std::string("expected '") + c + "' but got " + describe_here());
        advance();
    }

    bool accept(char c) {
        if (!at_end() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    int parse_int() {
        skip_ws();
        SourcePos start = pos_;
        std::size_t begin = offset_;
        if (!at_end() && (peek() == '-' || peek() == '+')) advance();
        std::size_t digits_from = offset_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (offset_ == digits_from)
            throw ParseError(start, "expected integer but got " + describe_here());
        try {
            return std::stoi(text_.substr(begin, offset_ - begin));
        } catch (const std::exception&) {
            throw ParseError(start, "integer out of range");
        }
    }

    Event parse_event() {
        skip_ws();
        expect('(');
        int site = parse_int();
        skip_ws();
        expect(',');
        int time = parse_int();
        skip_ws();
        expect(')');
        return Event{site, time};
    }

    FilterLiteral parse_filter() {
        skip_ws();
        expect('{');
        skip_ws();
        if (at_end() || peek() != 't')
            fail("expected 't' but got " + describe_here());
        advance();
        skip_ws();
        expect('=');
        FilterLiteral f;
        f.time = parse_int();
        skip_ws();
        expect(':');
        f.holes.push_back(parse_int());
        skip_ws();
        while (accept(',')) {
            f.holes.push_back(parse_int());
            skip_ws();
        }
        expect('}');
        return f;
    }

    SetupExprPtr parse_setup_literal() {
        SourcePos start = pos_;
        expect('[');
        SetupLiteral lit;
        lit.sink = parse_event();
        // Each comma introduces either a filter or the final event; after
        // the final event only ']' may follow.
        while (true) {
            skip_ws();
            expect(',');
            skip_ws();
            if (peek_is('{')) {
                lit.filters.push_back(parse_filter());
            } else if (peek_is('(')) {
                lit.source = parse_event();
                break;
            } else {
                fail("expected '{' or '(' but got " + describe_here());
            }
        }
        skip_ws();
        expect(']');
        auto expr = std::make_shared<SetupExpr>();
        expr->pos = start;
        expr->node = std::move(lit);
        return expr;
    }

    bool peek_is(char c) const { return !at_end() && peek() == c; }

    SetupExprPtr parse_atom() {
        skip_ws();
        if (at_end())
            fail("expected a setup or '(' but got end of input");
        if (peek() == '[') return parse_setup_literal();
        if (peek() == '(') {
            advance();
            SetupExprPtr inner = parse_expr();
            skip_ws();
            expect(')');
            return inner;
        }
        fail("expected '[' or '(' but got " + describe_here());
    }

    SetupExprPtr parse_term() {
        SetupExprPtr left = parse_atom();
        while (true) {
            skip_ws();
            if (!accept('*')) return left;
            SourcePos at = pos_;
            SetupExprPtr right = parse_atom();
            auto expr = std::make_shared<SetupExpr>();
            expr->pos = at;
            expr->node = AndNode{left, right};
            left = expr;
        }
    }

    SetupExprPtr parse_expr() {
        SetupExprPtr left = parse_term();
        while (true) {
            skip_ws();
            if (!accept('|')) return left;
            SourcePos at = pos_;
            SetupExprPtr right = parse_term();
            auto expr = std::make_shared<SetupExpr>();
            expr->pos = at;
            expr->node = OrNode{left, right};
            left = expr;
        }
    }
};

} // namespace

SetupExprPtr parse_setup_expr(const std::string& text) { return Parser(text).parse(); }

bool equal(const SetupExpr& a, const SetupExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<SetupLiteral>(&a.node))
        return *la == std::get<SetupLiteral>(b.node);
    if (const auto* aa = std::get_if<AndNode>(&a.node)) {
        const auto& ab = std::get<AndNode>(b.node);
        return equal(*aa->later, *ab.later) && equal(*aa->earlier, *ab.earlier);
    }
    const auto& oa = std::get<OrNode>(a.node);
    const auto& ob = std::get<OrNode>(b.node);
    return equal(*oa.left, *ob.left) && equal(*oa.right, *ob.right);
}

namespace {

enum class Level { Expr, Term, Atom };

void print_node(const SetupExpr& expr, Level level, std::ostream& out) {
    if (const auto* lit = std::get_if<SetupLiteral>(&expr.node)) {
        out << "[(" << lit->sink.site << "," << lit->sink.time << ")";
        for (const FilterLiteral& f : lit->filters) {
            out << ",{t=" << f.time << ":";
            for (std::size_t i = 0; i < f.holes.size(); ++i) {
                if (i) out << ",";
                out << f.holes[i];
            }
            out << "}";
        }
        out << ",(" << lit->source.site << "," << lit->source.time << ")]";
        return;
    }
    if (const auto* a = std::get_if<AndNode>(&expr.node)) {
        bool parens = level == Level::Atom;
        if (parens) out << "(";
        print_node(*a->later, Level::Term, out);
        out << "*";
        print_node(*a->earlier, Level::Atom, out);
        if (parens) out << ")";
        return;
    }
    const auto& o = std::get<OrNode>(expr.node);
    bool parens = level != Level::Expr;
    if (parens) out << "(";
    print_node(*o.left, Level::Expr, out);
    out << "|";
    print_node(*o.right, Level::Term, out);
    if (parens) out << ")";
}

} // namespace

std::string print_setup_expr(const SetupExpr& expr) {
    std::ostringstream out;
    print_node(expr, Level::Expr, out);
    return out.str();
}

Setup eval_setup_expr(const SetupExpr& expr, const Grid& grid) {
    try {
        if (const auto* lit = std::get_if<SetupLiteral>(&expr.node)) {
            std::vector<Filter> filters;
            filters.reserve(lit->filters.size());
            for (const FilterLiteral& f : lit->filters)
                filters.emplace_back(grid, f.time, f.holes);
            return make_setup(grid, lit->source, std::move(filters), lit->sink);
        }
        if (const auto* a = std::get_if<AndNode>(&expr.node)) {
            Setup later = eval_setup_expr(*a->later, grid);
            Setup earlier = eval_setup_expr(*a->earlier, grid);
            return and_compose(later, earlier);
        }
        const auto& o = std::get<OrNode>(expr.node);
        Setup left = eval_setup_expr(*o.left, grid);
        Setup right = eval_setup_expr(*o.right, grid);
        return or_join(left, right).setup;
    } catch (const EvalError&) {
        throw; // already located at an inner node
    } catch (const Error& e) {
        throw EvalError(expr.pos, e);
    }
}

int max_referenced_site(const SetupExpr& expr) {
    if (const auto* lit = std::get_if<SetupLiteral>(&expr.node)) {
        int site = std::max(lit->sink.site, lit->source.site);
        for (const FilterLiteral& f : lit->filters)
            for (int h : f.holes) site = std::max(site, h);
        return site;
    }
    if (const auto* a = std::get_if<AndNode>(&expr.node))
        return std::max(max_referenced_site(*a->later), max_referenced_site(*a->earlier));
    const auto& o = std::get<OrNode>(expr.node);
    return std::max(max_referenced_site(*o.left), max_referenced_site(*o.right));
}

} // namespace ampcalc
