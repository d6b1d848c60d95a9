#include <doctest.h>

#include <cmath>

#include "ahg/expr.hpp"
#include "ahg/manifold.hpp"

using namespace ahg;

TEST_SUITE_BEGIN("expr");

TEST_CASE("rational metric entry parses with a division root") {
    ExprAst ast = parse_expr("4/(1+x1^2+x2^2)^2", 2);
    const auto& root = ast.nodes.back();
    CHECK(root.kind == ExprAst::Kind::Binary);
    CHECK(root.op == '/');
    double x[2] = {0.0, 0.0};
    CHECK(eval_expr(ast, x, 2).value == doctest::Approx(4.0));
}

TEST_CASE("sin(pi) is numerically zero") {
    ExprAst ast = parse_expr("sin(pi)", 1);
    double x[1] = {0.3};
    CHECK(std::abs(eval_expr(ast, x, 1).value) < 1e-15);
}

TEST_CASE("coordinate out of range") {
    CHECK_THROWS_AS(parse_expr("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_expr("x1 + zz", 2), ParseError);
}

TEST_CASE("syntax errors carry offsets") {
    try {
        parse_expr("1 + (x1*", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset >= 8);
    }
    CHECK_THROWS_AS(parse_expr("", 2), ParseError);
    CHECK_THROWS_AS(parse_expr("x1 x2", 2), ParseError);
    CHECK_THROWS_AS(parse_expr("sin x1", 2), ParseError);
}

TEST_CASE("product jets through the AST") {
    ExprAst ast = parse_expr("x1*x2", 2);
    double x[2] = {2.0, 3.0};
    Jet j = eval_expr(ast, x, 2);
    CHECK(j.value == 6.0);
    CHECK(j.h(0, 1) == 1.0);
}

TEST_CASE("reciprocal of the squared radius") {
    ExprAst ast = parse_expr("1/(x1^2+x2^2)", 2);
    double x[2] = {1.0, 1.0};
    Jet j = eval_expr(ast, x, 2);
    CHECK(j.value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(j.g(0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(j.g(1) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("precedence: unary minus, powers, products") {
    double x[1] = {2.0};
    CHECK(eval_expr(parse_expr("-x1^2", 1), x, 1).value == -4.0);
    CHECK(eval_expr(parse_expr("2*x1^3", 1), x, 1).value == 16.0);
    CHECK(eval_expr(parse_expr("1-2-3", 1), x, 1).value == -4.0);
    CHECK(eval_expr(parse_expr("12/2/3", 1), x, 1).value == 2.0);
    CHECK(eval_expr(parse_expr("x1^-1", 1), x, 1).value == 0.5);
    CHECK(eval_expr(parse_expr("x1^(-2)", 1), x, 1).value == 0.25);
    CHECK(eval_expr(parse_expr("x1^0.5", 1), x, 1).value == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("variable exponents are rejected") {
    CHECK_THROWS_AS(parse_expr("x1^x2", 2), ParseError);
    CHECK_THROWS_AS(parse_expr("2^(x1+1)", 2), ParseError);
}

TEST_CASE("pretty-print reparses to an identical tree") {
    const char* samples[] = {
        "4/(1+x1^2+x2^2)^2",
        "sin(x1)*cos(x2)-exp(-x1*x2)/sqrt(1+x2^2)",
        "-x1 + 2.5*x2^3 - log(x1+4)",
        "1+x1^2+x4^2",
        "x1^-2 * (x2 - pi)",
    };
    for (const char* s : samples) {
        ExprAst a = parse_expr(s, 4);
        std::string printed = pretty_print(a);
        ExprAst b = parse_expr(printed, 4);
        CHECK(a == b);
    }
}

TEST_CASE("orders 1 and 3 agree exactly on value and gradient") {
    ExprAst ast = parse_expr("sin(x1*x2)/(1+x1^2) + sqrt(x2+3)^3", 2);
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        double x[2] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Jet j1 = eval_expr(ast, x, 1);
        Jet j3 = eval_expr(ast, x, 3);
        CHECK(j1.value == j3.value);
        CHECK(j1.g(0) == j3.g(0));
        CHECK(j1.g(1) == j3.g(1));
    }
}

TEST_CASE("custom variable names for report expressions") {
    ExprAst ast = parse_expr("s - s_J + 2*delta_lee", {"s", "s_J", "delta_lee"});
    std::vector<Jet> args = {jet_const(1, 1, 5.0), jet_const(1, 1, 2.0), jet_const(1, 1, 0.25)};
    CHECK(eval_expr(ast, args).value == doctest::Approx(3.5));
}

TEST_CASE("degenerate evaluation propagates") {
    ExprAst ast = parse_expr("1/x1", 1);
    double x[1] = {0.0};
    CHECK_THROWS_AS(eval_expr(ast, x, 1), DegenerateValue);
}

TEST_SUITE_END();
