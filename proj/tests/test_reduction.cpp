#include "liesym/reduction.hpp"

#include "random_expr.hpp"

#include <doctest.h>

using namespace liesym;

namespace {

const SymmetryFixture& fixture() {
    static const SymmetryFixture f = hpz_fixture(C1Reading::Product);
    return f;
}

// Random binding with a rational positive omega and R V + W != 0.
ParameterBinding random_binding(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-6, 6), pos(1, 6);
    for (;;) {
        Rational R = make_rational(small(rng), pos(rng) % 3 + 1);
        Rational w = make_rational(pos(rng), pos(rng) % 3 + 1);
        Rational V = make_rational(small(rng), 2), W = make_rational(small(rng), 3);
        if (R * V + W == 0) continue;
        ParameterBinding b;
        b.set(sym::R(), R);
        b.set(sym::S(), Rational((R * R - w * w) / 4));
        b.set(sym::V(), V);
        b.set(sym::W(), W);
        b.set(sym::omega(), w);
        return b;
    }
}

} // namespace

TEST_CASE("delta3 reduces to the travelling-wave form") {
    ReductionMap m = fixture_map(fixture(), "delta3");
    CHECK(m.invariant() == parse("(R + omega)*y + 2*x"));
    CHECK(m.multiplier_exponent().is_zero());
    ReducedEquation red = reduce(make_hpz(), m);
    CHECK(red.certificate == "no-residual-xy");
    // hand substitution of u = z(t, (R+omega) y + 2 x)
    Expression expected = parse("R*z + 1/2*(R - omega)*r*z_r + 2*(V*(R + omega) + 2*W)*z_rr");
    CHECK(red.pde.rhs() == expected);
    CHECK(red.pde.rhs() == equation_by_name("reduced-3.2").rhs());
}

TEST_CASE("all four reductions match the transcribed forms term by term") {
    for (const char* g : {"delta3", "delta4", "delta5", "delta6"}) {
        CAPTURE(g);
        ReductionMap m = fixture_map(fixture(), g);
        ReducedEquation red = reduce(make_hpz(), m);
        const EquationEntry& entry = equation_entry(printed_reduction(g).reduced_equation);
        for (const TermComparison& tc : compare_with_transcription(red, entry)) {
            CAPTURE(tc.jet.text());
            CAPTURE(render(tc.derived));
            CAPTURE(render(tc.printed));
            CHECK(tc.match);
        }
    }
}

TEST_CASE("multiplier exponent follows the normalization rule") {
    ReductionMap m5 = fixture_map(fixture(), "delta5");
    const Expression& K1 = m5.constants.at("K1");
    const Expression& K2 = m5.constants.at("K2");
    const Expression R(sym::R()), W(sym::W());
    CHECK(m5.q3.is_zero());
    CHECK(m5.q1 == -R * K1);
    CHECK(m5.q2 == R * (K1 * K1 * W - K2) / 2);
    CHECK(m5.multiplier_exponent() == *printed_reduction("delta5").multiplier_exponent);
    ReductionMap m6 = fixture_map(fixture(), "delta6");
    CHECK(m6.multiplier_exponent() == *printed_reduction("delta6").multiplier_exponent);
    // u exp(-Q) is invariant
    for (auto* m : {&m5, &m6})
        CHECK(m->generator.apply(Expression(sym::u()) * exp(-m->multiplier_exponent())).is_zero());
}

TEST_CASE("default invariant is proportional to the printed one") {
    for (const char* g : {"delta3", "delta4", "delta5", "delta6"}) {
        CAPTURE(g);
        ReductionMap a = invariants_for(fixture()[g]);
        ReductionMap b = fixture_map(fixture(), g);
        // alpha_a beta_b - beta_a alpha_b = 0
        CHECK((a.alpha * b.beta - a.beta * b.alpha).is_zero());
        CHECK(fixture()[g].apply(a.invariant()).is_zero());
        ReducedEquation ra = reduce(make_hpz(), a);
        CHECK(!depends_on(ra.pde.rhs(), sym::x()));
    }
}

TEST_CASE("time reduction gives the stationary equation") {
    StationaryEquation st = reduce_time(make_hpz());
    const EquationEntry& e = equation_entry("stationary-2.6");
    REQUIRE(e.stationary);
    CHECK(st.lhs == e.stationary->lhs);
    CHECK(st.lhs == parse("1/2*R*z - x*z_y + R*x*z_x + S*y*z_x + V*z_xy + W*z_xx"));
    CHECK(reduce_time(make_heat()).lhs == parse("z_xx"));
    CHECK(reduce_time(make_heat(), parse("2")).lhs == parse("z_xx - z"));
}

TEST_CASE("unsupported generators and singular bindings are refused") {
    CHECK_THROWS_AS(invariants_for(parse_generator("xi_t = 1", make_hpz())), UnsupportedGenerator);
    CHECK_THROWS_AS(invariants_for(parse_generator("xi_x = x", make_hpz())), UnsupportedGenerator);
    CHECK_THROWS_AS(invariants_for(parse_generator("xi_x = 1; eta = x^2*u", make_hpz())), UnsupportedGenerator);
    CHECK_THROWS_AS(invariants_for(parse_generator("eta = u", make_hpz())), UnsupportedGenerator);
    // d_x is not a symmetry of hpz: x survives
    CHECK_THROWS_AS(reduce(make_hpz(), invariants_for(parse_generator("xi_x = 1", make_hpz()))), ReductionFailure);
    CHECK_THROWS_WITH_AS(check_reduction_binding(ParameterBinding::parse("R=4,S=4,V=1,W=1")),
                         doctest::Contains("repeated-root"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(check_reduction_binding(ParameterBinding::parse("R=5,S=4,V=1,W=-5")),
                         doctest::Contains("singular"), std::invalid_argument);
    CHECK_NOTHROW(check_reduction_binding(ParameterBinding::parse("R=5,S=4,V=1,W=1")));
    CHECK_THROWS(printed_reduction("delta1"));
}

TEST_CASE("reduced solutions pull back to solutions") {
    // z(t, r) = a + b (r - r0) + c (r - r0)^2 + d (t - t0) with d fixed by the
    // reduced equation at (t0, r0); u = z exp(Q) must satisfy u_t = F at the
    // point. Derivatives of u are taken on the explicit function.
    std::mt19937 rng(20261016);
    testing::RandomExpr rnd(7);
    const Expression t(sym::t()), x(sym::x()), y(sym::y()), r(sym::r());
    int checked = 0;
    for (int trial = 0; trial < 10; ++trial) {
        ParameterBinding b = random_binding(rng);
        REQUIRE_NOTHROW(check_reduction_binding(b));
        SymmetryFixture f = fixture();
        EvolutionPDE pde = make_hpz().bind(b);
        for (const char* g : {"delta3", "delta4", "delta5", "delta6"}) {
            ReductionMap m = fixture_map(f, g);
            ReducedEquation red = reduce(make_hpz(), m);
            Expression G = b.apply(red.pde.rhs());
            Expression alpha = b.apply(m.alpha), beta = b.apply(m.beta), Q = b.apply(m.multiplier_exponent());
            for (int pt = 0; pt < 5; ++pt) {
                Rational t0 = rnd.value(), x0 = rnd.value(), y0 = rnd.value();
                Rational zc = rnd.value(), zr = rnd.value(), zrr = rnd.value();
                Rational r0 = *(alpha * Expression(x0) + beta * Expression(y0)).as_rational();
                std::map<Symbol, Rational> at{{sym::r(), r0}, {sym::z(), zc}, {parse("z_r").symbol(), zr},
                                              {parse("z_rr").symbol(), zrr}};
                Rational zt = evaluate(G, at);
                Expression rr = alpha * x + beta * y - Expression(r0);
                Expression z = Expression(zc) + Expression(zr) * rr + Expression(zrr / 2) * rr * rr +
                               Expression(zt) * (t - Expression(t0));
                Expression u = z * exp(Q);
                std::map<Symbol, Expression> jets;
                for (const Symbol& s : symbols(pde.rhs())) {
                    if (s == sym::u()) jets.emplace(s, u);
                    if (!s.is_jet()) continue;
                    Expression d = u;
                    for (int k = 0; k < s.count(Axis::X); ++k) d = differentiate(d, sym::x());
                    for (int k = 0; k < s.count(Axis::Y); ++k) d = differentiate(d, sym::y());
                    jets.emplace(s, d);
                }
                Expression defect = (differentiate(u, sym::t()) - substitute(pde.rhs(), jets)) / exp(Q);
                CHECK(evaluate(defect, {{sym::t(), t0}, {sym::x(), x0}, {sym::y(), y0}}) == 0);
                ++checked;
            }
        }
    }
    CHECK(checked == 200);
}
