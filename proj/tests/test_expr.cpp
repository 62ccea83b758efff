#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "colloc/expr.hpp"
#include "colloc/registry.hpp"

using namespace colloc;
using expr::parse;

TEST_CASE("atoms and precedence")
{
    CHECK(expr::eval(*parse("y"), 0.0, 3.5) == 3.5);
    CHECK(expr::eval(*parse("t"), -2.0, 0.0) == -2.0);
    CHECK(expr::eval(*parse("2.5"), 0.0, 0.0) == 2.5);
    CHECK(expr::eval(*parse("1+2*3"), 0, 0) == 7.0);
    CHECK(expr::eval(*parse("(1+2)*3"), 0, 0) == 9.0);
    CHECK(expr::eval(*parse("8/4/2"), 0, 0) == 1.0);       // left associative
    CHECK(expr::eval(*parse("2^3^2"), 0, 0) == 512.0);     // right associative
    CHECK(expr::eval(*parse("-2^2"), 0, 0) == 4.0);        // unary binds before ^
    CHECK(expr::eval(*parse("2*y/t^3"), 2.0, 5.0) == (2.0 * 5.0) / std::pow(2.0, 3.0));
}

TEST_CASE("functions")
{
    CHECK(expr::eval(*parse("sin(t)"), 0.3, 0) == std::sin(0.3));
    CHECK(expr::eval(*parse("cos(t)+exp(y)"), 0.3, 1.1) == std::cos(0.3) + std::exp(1.1));
    CHECK(expr::eval(*parse("ln(t)"), 2.0, 0) == std::log(2.0));
    CHECK(expr::eval(*parse("sqrt(abs(y))"), 0, -4.0) == 2.0);
}

TEST_CASE("unary minus after a binary operator")
{
    // grammar permits: sin(t)+-y parses as sin(t)+(-y)
    const auto ast = parse("sin(t)+-y");
    CHECK(expr::eval(*ast, 0.5, 2.0) == std::sin(0.5) - 2.0);
}

TEST_CASE("errors carry byte offsets")
{
    const auto offset_of = [](const char* text) -> std::size_t {
        try {
            parse(text);
        } catch (const expr::ParseError& e) {
            return e.offset;
        }
        return static_cast<std::size_t>(-1);
    };

    CHECK(offset_of("2*") == 2);
    CHECK(offset_of("foo(t)") == 0);
    CHECK(offset_of("2**y") == 2);
    CHECK(offset_of("(1+2") == 4);
    CHECK(offset_of("1+2)") == 3);
    CHECK(offset_of("sin t") == 4);
    CHECK_THROWS_AS(parse(""), expr::ParseError);
}

TEST_CASE("parse of printed tree is equivalent")
{
    for (const char* text : {"2*y/t^3", "sin(t)+-y", "1+2*3-4/5", "-(t^2)^3",
                             "sqrt(abs(y))*exp(-t)", "0.125"}) {
        const auto ast = parse(text);
        const std::string printed = expr::print(*ast);
        const auto reparsed = parse(printed);
        CHECK(expr::print(*reparsed) == printed);
        std::mt19937 gen(7);
        std::uniform_real_distribution<double> dist(0.5, 3.0);
        for (int i = 0; i < 10; ++i) {
            const double t = dist(gen), y = dist(gen);
            CHECK(expr::eval(*ast, t, y) == expr::eval(*reparsed, t, y));
        }
    }
}

TEST_CASE("expression matches the built-in example2 right-hand side exactly")
{
    const auto ast = parse("2*y/t^3");
    const IVProblem& p = problem_by_name("example2");
    std::mt19937 gen(20240817);
    std::uniform_real_distribution<double> time(1.0, 3.0), state(0.1, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double t = time(gen), y = state(gen);
        State dydt;
        p.rhs(t, {y}, dydt);
        CHECK(expr::eval(*ast, t, y) == dydt[0]); // bitwise identical
    }
}

TEST_CASE("expression-backed problems integrate like built-ins")
{
    const auto ast = parse("2*y/t^3");
    const IVProblem custom = problem_from_expr(*ast, 1.0, 1.0, 3.0);
    CHECK(custom.t0 == 1.0);
    CHECK(custom.tf == 3.0);
    CHECK(!custom.exact);
    State dydt;
    custom.rhs(2.0, {3.0}, dydt);
    CHECK(dydt[0] == 6.0 / 8.0);
}
