#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "ampcalc/random.hpp"
#include "ampcalc/setup_expr.hpp"
#include "test_support.hpp"

using namespace ampcalc;

TEST_CASE("an elementary literal parses into a leaf") {
    const SetupExprPtr ast = parse_setup_expr("[(0,2),(0,0)]");
    const auto* lit = std::get_if<SetupLiteral>(&ast->node);
    REQUIRE(lit != nullptr);
    CHECK(lit->sink == Event{0, 2});
    CHECK(lit->source == Event{0, 0});
    CHECK(lit->filters.empty());

    const Setup s = eval_setup_expr(*ast, Grid(1));
    CHECK(s.source() == Event{0, 0});
    CHECK(s.sink() == Event{0, 2});
    CHECK(s.filters().empty());
}

TEST_CASE("literals accept filters, whitespace and negative ints") {
    const SetupExprPtr ast = parse_setup_expr(" [ (1, 3), {t= 2 : 0, 2}, (0, -1) ] ");
    const auto* lit = std::get_if<SetupLiteral>(&ast->node);
    REQUIRE(lit != nullptr);
    CHECK(lit->source == Event{0, -1});
    REQUIRE(lit->filters.size() == 1);
    CHECK(lit->filters[0].time == 2);
    CHECK(lit->filters[0].holes == std::vector<int>{0, 2});
}

TEST_CASE("or expressions evaluate to the merged filter") {
    const SetupExprPtr ast =
        parse_setup_expr("[(0,2),{t=1:0},(0,0)] | [(0,2),{t=1:1},(0,0)]");
    REQUIRE(std::get_if<OrNode>(&ast->node) != nullptr);

    const Setup joined = eval_setup_expr(*ast, Grid(2));
    REQUIRE(joined.filters().size() == 1);
    CHECK(joined.filters()[0].time() == 1);
    CHECK(joined.filters()[0].open_sites() == std::vector<int>{0, 1});
}

TEST_CASE("an unclosed bracket is reported at the offending column") {
    try {
        parse_setup_expr("[(0,2),(0,0)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos().line == 1);
        CHECK(e.pos().column == 13);
        CHECK(std::string(e.what()).rfind("1:13:", 0) == 0);
        CHECK(std::string(e.what()).find("']'") != std::string::npos);
    }
}

TEST_CASE("parse errors name the offending token") {
    auto message_of = [](const std::string& text) {
        try {
            parse_setup_expr(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };
    CHECK(message_of("").find("expected") != std::string::npos);
    CHECK(message_of("[(a,2),(0,0)]").find("integer") != std::string::npos);
    CHECK(message_of("[(0,2),{x=1:0},(0,0)]").find("'t'") != std::string::npos);
    CHECK(message_of("[(0,2),(0,0)] % [(0,2),(0,0)]").find("'%'") != std::string::npos);
    CHECK(message_of("[(0,2),(0,0)] |").find("expected") != std::string::npos);
    CHECK(message_of("((0,2)").find("expected") != std::string::npos);
}

TEST_CASE("operator precedence binds * tighter than |") {
    const std::string a = "[(0,3),{t=2:0},(0,1)]";
    const std::string b = "[(0,3),{t=2:1},(0,1)]";
    const std::string c = "[(0,1),(0,0)]";

    const SetupExprPtr flat = parse_setup_expr(a + "|" + b + "*" + c);
    const auto* top_or = std::get_if<OrNode>(&flat->node);
    REQUIRE(top_or != nullptr);
    CHECK(std::get_if<AndNode>(&top_or->right->node) != nullptr);

    const SetupExprPtr grouped = parse_setup_expr("(" + a + "|" + b + ")*" + c);
    CHECK(std::get_if<AndNode>(&grouped->node) != nullptr);
}

TEST_CASE("composition distributes over the join") {
    const std::string a = "[(0,3),{t=2:0},(0,1)]";
    const std::string b = "[(0,3),{t=2:1},(0,1)]";
    const std::string c = "[(0,1),(0,0)]";
    const Grid grid(2);

    const Setup grouped = eval_setup_expr(*parse_setup_expr("(" + a + "|" + b + ")*" + c), grid);
    const Setup expanded =
        eval_setup_expr(*parse_setup_expr(a + "*" + c + "|" + b + "*" + c), grid);
    CHECK(grouped == expanded);
}

TEST_CASE("evaluation errors carry the sub-expression position") {
    // junction mismatch: later factor starts at (1,1), earlier ends at (0,1)
    const std::string text = "[(0,2),(1,1)] * [(0,1),(0,0)]";
    try {
        eval_setup_expr(*parse_setup_expr(text), Grid(2));
        FAIL("expected an eval error");
    } catch (const EvalError& e) {
        CHECK(e.code() == ErrorCode::JunctionMismatch);
        CHECK(std::string(e.what()).find("1:1") != std::string::npos);
    }

    try {
        eval_setup_expr(*parse_setup_expr("[(5,2),(0,0)]"), Grid(2));
        FAIL("expected an eval error");
    } catch (const EvalError& e) {
        CHECK(e.code() == ErrorCode::SiteOutOfRange);
    }
}

TEST_CASE("max_referenced_site scans events and holes") {
    CHECK(max_referenced_site(*parse_setup_expr("[(0,2),(0,0)]")) == 0);
    CHECK(max_referenced_site(*parse_setup_expr("[(1,2),{t=1:0,3},(2,0)]")) == 3);
    CHECK(max_referenced_site(*parse_setup_expr("[(1,2),(0,0)]|[(1,2),(2,0)]*[(2,0),(0,-1)]")) ==
          2);
}

namespace {

SetupExprPtr random_ast(Rng& rng, int depth) {
    if (depth == 0 || rng.uniform_int(0, 2) == 0) {
        SetupLiteral lit;
        lit.sink = Event{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)};
        lit.source = Event{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)};
        const int nf = rng.uniform_int(0, 2);
        for (int i = 0; i < nf; ++i) {
            FilterLiteral f;
            f.time = rng.uniform_int(-9, 9);
            const int nh = rng.uniform_int(1, 3);
            for (int h = 0; h < nh; ++h) f.holes.push_back(rng.uniform_int(0, 9));
            lit.filters.push_back(std::move(f));
        }
        return std::make_shared<SetupExpr>(SetupExpr{{}, std::move(lit)});
    }
    SetupExprPtr left = random_ast(rng, depth - 1);
    SetupExprPtr right = random_ast(rng, depth - 1);
    if (rng.coin())
        return std::make_shared<SetupExpr>(SetupExpr{{}, AndNode{left, right}});
    return std::make_shared<SetupExpr>(SetupExpr{{}, OrNode{left, right}});
}

} // namespace

TEST_CASE("printing and reparsing preserves the tree") {
    Rng rng(40);
    for (int i = 0; i < 100; ++i) {
        const SetupExprPtr ast = random_ast(rng, 3);
        const std::string text = print_setup_expr(*ast);
        const SetupExprPtr back = parse_setup_expr(text);
        CHECK(equal(*ast, *back));
        CHECK(print_setup_expr(*back) == text);
    }
}
