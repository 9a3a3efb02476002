#include "liesym/pde.hpp"
#include "random_expr.hpp"

#include <doctest.h>

using namespace liesym;
using liesym::testing::jet_atom;
using liesym::testing::random_polynomial;

TEST_CASE("hpz and heat constructors") {
    EvolutionPDE hpz = make_hpz();
    CHECK(hpz.str() == "u_t = R*u + R*x*u_x + S*y*u_x - x*u_y + W*u_xx + V*u_xy");
    CHECK(hpz.rhs() == parse("R*u - x*u_y + R*x*u_x + S*y*u_x + V*u_xy + W*u_xx"));
    CHECK(hpz.spatial_order() == 2);
    CHECK(hpz.time_order() == 1);
    CHECK(hpz.bind(ParameterBinding::parse("R=0,S=0,V=0")).rhs() == parse("-x*u_y + W*u_xx"));
    CHECK(make_heat().str() == "u_t = u_xx");
}

TEST_CASE("invalid evolution equations are rejected") {
    CHECK_THROWS_AS(EvolutionPDE({sym::x(), sym::t()}, sym::u(), parse("u_xx")), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionPDE({sym::t(), sym::x()}, sym::u(), parse("u_tx")), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionPDE({sym::t(), sym::x()}, sym::u(), parse("u_xxx")), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionPDE({sym::t(), sym::x()}, sym::u(), parse("u_y")), std::invalid_argument);
}

TEST_CASE("total derivative basics") {
    CHECK(total_derivative(parse("u"), sym::x()) == parse("u_x"));
    CHECK(total_derivative(parse("x*u"), sym::y()) == parse("x*u_y"));
    CHECK(total_derivative(parse("x*u"), sym::x()) == parse("u + x*u_x"));
    CHECK(total_derivative(parse("z_r^2"), sym::r()) == parse("2*z_r*z_rr"));
    Expression a(sym::function("a"));
    CHECK(total_derivative(a * parse("u_x"), sym::t()) ==
          Expression(sym::function("a", 1)) * parse("u_x") + a * parse("u_tx"));
    CHECK_THROWS_AS(total_derivative(parse("u_xxy"), sym::x()), JetOrderOverflow);
}

TEST_CASE("D_t u_x on the hpz solution manifold") {
    // D_x F by hand: 2R u_x - u_y - x u_xy + R x u_xx + S y u_xx + V u_xxy + W u_xxx
    Expression expected = parse("2*R*u_x - u_y - x*u_xy + R*x*u_xx + S*y*u_xx + V*u_xxy + W*u_xxx");
    CHECK(total_derivative(parse("u_x"), sym::t(), make_hpz()) == expected);
    CHECK(total_derivative(parse("u_y"), sym::t(), make_hpz()) ==
          parse("R*u_y + S*u_x - x*u_yy + R*x*u_xy + S*y*u_xy + V*u_xyy + W*u_xxy"));
}

TEST_CASE("time-jet elimination") {
    EvolutionPDE hpz = make_hpz();
    CHECK(eliminate_time_jets(parse("u_t"), hpz) == hpz.rhs());
    CHECK(eliminate_time_jets(parse("u_t") - hpz.rhs(), hpz).is_zero());
    CHECK(eliminate_time_jets(total_derivative(parse("u_t") - hpz.rhs(), sym::x()), hpz).is_zero());
    CHECK(eliminate_time_jets(total_derivative(parse("u_t") - hpz.rhs(), sym::y()), hpz).is_zero());
    // u_tt needs fourth-order jets for a second-order right-hand side
    CHECK_THROWS_AS(time_jet_value(sym::jet(sym::u(), {2, 0, 0, 0}), hpz), JetOrderOverflow);
    EvolutionPDE transport({sym::t(), sym::x()}, sym::u(), parse("x*u_x"));
    CHECK(time_jet_value(sym::jet(sym::u(), {2, 0, 0, 0}), transport) == parse("x*u_x + x^2*u_xx"));
    EvolutionPDE reduced = equation_by_name("reduced-3.2");
    CHECK(eliminate_time_jets(parse("z_t"), reduced) == reduced.rhs());
}

TEST_CASE("elimination agrees with an exact heat solution") {
    // u = x^2 + 2t + x^3 + 6 t x solves u_t = u_xx
    std::map<Symbol, Rational> at;
    std::mt19937 rng(3);
    std::vector<Expression> atoms{parse("t"), parse("x"), parse("u"), parse("u_x"), parse("u_xx"),
                                  parse("u_t"), parse("u_tx"), parse("u_xxx")};
    EvolutionPDE heat = make_heat();
    for (int i = 0; i < 500; ++i) {
        Rational t = make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
        Rational x = make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
        at[sym::t()] = t;
        at[sym::x()] = x;
        at[sym::u()] = x * x + 2 * t + x * x * x + 6 * t * x;
        at[sym::jet(sym::u(), {0, 1, 0, 0})] = 2 * x + 3 * x * x + 6 * t;
        at[sym::jet(sym::u(), {0, 2, 0, 0})] = 2 + 6 * x;
        at[sym::jet(sym::u(), {0, 3, 0, 0})] = 6;
        at[sym::jet(sym::u(), {1, 0, 0, 0})] = 2 + 6 * x;
        at[sym::jet(sym::u(), {1, 1, 0, 0})] = 6;
        Expression p = random_polynomial(rng, atoms, 4, 3);
        CHECK(evaluate(eliminate_time_jets(p, heat), at) == evaluate(p, at));
    }
}

TEST_CASE("total derivatives commute") {
    std::mt19937 rng(17);
    std::vector<Expression> atoms{parse("t"), parse("x"),   parse("y"),   parse("u"),
                                  parse("u_x"), parse("u_y"), parse("R"), exp(parse("R*t + x"))};
    for (int i = 0; i < 500; ++i) {
        Expression e = random_polynomial(rng, atoms, 4, 3);
        CHECK(total_derivative(total_derivative(e, sym::x()), sym::y()) ==
              total_derivative(total_derivative(e, sym::y()), sym::x()));
        CHECK(total_derivative(total_derivative(e, sym::t()), sym::x()) ==
              total_derivative(total_derivative(e, sym::x()), sym::t()));
    }
}

TEST_CASE("Leibniz rule") {
    std::mt19937 rng(23);
    std::vector<Expression> atoms{parse("t"),   parse("x"),    parse("y"),    parse("u"),   parse("u_x"),
                                  parse("u_y"), parse("u_xx"), parse("u_xy"), parse("omega"), exp(parse("y^2"))};
    const Symbol vars[] = {sym::t(), sym::x(), sym::y()};
    for (int i = 0; i < 500; ++i) {
        Expression a = random_polynomial(rng, atoms, 3, 2), b = random_polynomial(rng, atoms, 3, 2);
        const Symbol& v = vars[i % 3];
        CHECK(total_derivative(a * b, v) == total_derivative(a, v) * b + a * total_derivative(b, v));
    }
}

TEST_CASE("registry") {
    CHECK(equation_names().size() == 7);
    for (auto& n : equation_names()) CHECK_NOTHROW(equation_entry(n));
    CHECK_THROWS_AS(equation_by_name("stationary-2.6"), std::invalid_argument);
    CHECK_THROWS_AS(equation_by_name("nope"), std::invalid_argument);
    EvolutionPDE r7 = equation_by_name("reduced-3.7");
    CHECK(r7.independents() == std::vector<Symbol>{sym::t(), sym::r()});
    CHECK(r7.dependent() == sym::z());
    CHECK(equation_entry("reduced-3.7").printed_factor == parse("2*R*V + 2*W"));
}
