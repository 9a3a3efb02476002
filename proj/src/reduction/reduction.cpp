#include "liesym/reduction.hpp"

#include <stdexcept>

namespace liesym {

namespace {

bool coefficient_only(const Expression& e) {
    for (const Symbol& s : symbols(e))
        if (!s.is_coefficient()) return false;
    return true;
}

const std::vector<Symbol>& hpz_vars() {
    static const std::vector<Symbol> v{sym::t(), sym::x(), sym::y()};
    return v;
}

/// Total derivative of an expression in x, y and z-jets, where z depends on
/// (t, r) and r = alpha x + beta y.
Expression chain(const Expression& e, Axis axis, const Expression& alpha, const Expression& beta, const Symbol& z) {
    const Symbol v = axis == Axis::T ? sym::t() : axis == Axis::X ? sym::x() : sym::y();
    Expression out = partial(e, v);
    for (const Symbol& s : symbols(e)) {
        if (!(s.is_dependent() || s.is_jet()) || s.name() != z.name()) continue;
        Expression d = partial(e, s);
        if (d.is_zero()) continue;
        if (axis == Axis::T)
            out += d * Expression(sym::jet_shift(s, Axis::T));
        else
            out += d * (axis == Axis::X ? alpha : beta) * Expression(sym::jet_shift(s, Axis::R));
    }
    return out;
}

} // namespace

Expression ReductionMap::invariant() const { return alpha * Expression(sym::x()) + beta * Expression(sym::y()); }

Expression ReductionMap::multiplier_exponent() const {
    const Expression x(sym::x()), y(sym::y());
    return q1 * x * y + q2 * y * y + q3 * x * x;
}

ReductionMap invariants_for(const VectorField& vf, const std::optional<Expression>& preferred) {
    if (vf.independents() != hpz_vars() || vf.dependent() != sym::u())
        throw UnsupportedGenerator("reduction needs a generator in (t, x, y; u)");
    if (!vf.xi(sym::t()).is_zero()) throw UnsupportedGenerator("generator has a d_t component");
    const Expression& gx = vf.xi(sym::x());
    const Expression& gy = vf.xi(sym::y());
    if (gx.is_zero() && gy.is_zero()) throw UnsupportedGenerator("generator has no spatial component");
    const Expression c = gy.is_zero() ? gx : gy;
    for (const Symbol& v : {sym::x(), sym::y(), sym::u()})
        if (depends_on(c, v)) throw UnsupportedGenerator("spatial components depend on " + v.text() + ", not only on t");
    ReductionMap map;
    map.generator = vf;
    map.p = gx / c;
    map.q = gy / c;
    if (!coefficient_only(map.p) || !coefficient_only(map.q))
        throw UnsupportedGenerator("d_x and d_y components are not proportional with a constant ratio");
    Expression mult = partial(vf.eta(), sym::u()) / c;
    if (depends_on(mult, sym::u()) || !(mult * Expression(sym::u()) * c == vf.eta()))
        throw UnsupportedGenerator("eta is not linear homogeneous in u");
    auto terms = collect(mult, {sym::x(), sym::y()});
    map.m = Expression(0);
    map.n = Expression(0);
    for (auto& term : terms) {
        if (!coefficient_only(term.coefficient)) throw UnsupportedGenerator("eta/u has non-constant coefficients");
        if (term.exponents == std::vector<int>{1, 0})
            map.m = term.coefficient;
        else if (term.exponents == std::vector<int>{0, 1})
            map.n = term.coefficient;
        else
            throw UnsupportedGenerator("eta/u is not of the form m x + n y");
    }
    // p Q_x + q Q_y = m x + n y
    if (!map.q.is_zero()) {
        map.q3 = Expression(0);
        map.q1 = map.m / map.q;
        map.q2 = (map.n - map.p * map.q1) / (2 * map.q);
    } else {
        map.q2 = Expression(0);
        map.q1 = map.n / map.p;
        map.q3 = map.m / (2 * map.p);
    }
    if (preferred) {
        auto lin = collect(*preferred, {sym::x(), sym::y()});
        map.alpha = Expression(0);
        map.beta = Expression(0);
        for (auto& term : lin) {
            if (!coefficient_only(term.coefficient)) throw std::invalid_argument("preferred invariant is not linear");
            if (term.exponents == std::vector<int>{1, 0})
                map.alpha = term.coefficient;
            else if (term.exponents == std::vector<int>{0, 1})
                map.beta = term.coefficient;
            else
                throw std::invalid_argument("preferred invariant is not linear homogeneous in x, y");
        }
    } else {
        map.alpha = map.q;
        map.beta = -map.p;
    }
    if (map.alpha.is_zero() && map.beta.is_zero()) throw std::logic_error("degenerate invariant");
    if (!vf.apply(map.invariant()).is_zero())
        throw std::logic_error("internal consistency: generator does not annihilate r = " + render(map.invariant()));
    Expression z_of_u = Expression(sym::u()) * exp(-map.multiplier_exponent());
    if (!vf.apply(z_of_u).is_zero())
        throw std::logic_error("internal consistency: multiplier condition fails for Q = " +
                               render(map.multiplier_exponent()));
    return map;
}

Expression ReducedEquation::scaled_form(const Expression& factor) const {
    return factor * (pde.rhs() - Expression(pde.time_jet()));
}

ReducedEquation reduce(const EvolutionPDE& pde, const ReductionMap& map) {
    if (pde.independents() != hpz_vars() || pde.dependent() != sym::u())
        throw std::invalid_argument("reduction expects an equation in (t, x, y; u)");
    const Symbol z = sym::z();
    const Expression eQ = exp(map.multiplier_exponent());
    // u_J for every jet in u_t - F
    std::map<Symbol, Expression> repl;
    const Expression ut = Expression(pde.time_jet()) - pde.rhs();
    for (const Symbol& s : symbols(ut)) {
        if (!(s.is_dependent() || s.is_jet()) || s.name() != "u") continue;
        Expression v = Expression(z) * eQ;
        for (int a = 0; a < 3; ++a)
            for (int k = 0; k < s.index()[a]; ++k) v = chain(v, static_cast<Axis>(a), map.alpha, map.beta, z);
        repl.emplace(s, v);
    }
    Expression reduced = substitute(ut, repl) / eQ;
    // express in r
    const Expression r(sym::r());
    Expression in_r;
    if (!map.alpha.is_zero())
        in_r = substitute(reduced, sym::x(), (r - map.beta * Expression(sym::y())) / map.alpha);
    else
        in_r = substitute(reduced, sym::y(), (r - map.alpha * Expression(sym::x())) / map.beta);
    if (depends_on(in_r, sym::x()) || depends_on(in_r, sym::y()))
        throw ReductionFailure("generator does not reduce this equation: x or y survives in " + render(in_r));
    const Symbol zt = sym::jet(z, {1, 0, 0, 0});
    Expression lead = partial(in_r, zt);
    if (!(lead == Expression(1))) throw std::logic_error("unexpected z_t coefficient " + render(lead));
    Expression G = -(in_r - Expression(zt));
    ReducedEquation out{EvolutionPDE({sym::t(), sym::r()}, z, G), inverse(eQ), "no-residual-xy"};
    return out;
}

StationaryEquation reduce_time(const EvolutionPDE& pde, const std::optional<Expression>& rate) {
    if (!pde.is_autonomous()) throw std::invalid_argument("time reduction needs an autonomous equation");
    Expression k = rate ? *rate : partial(pde.rhs(), pde.dependent());
    if (!coefficient_only(k)) throw std::invalid_argument("time reduction rate must be constant: " + render(k));
    const Symbol z = sym::z();
    const Expression e = exp(k * Expression(sym::t()) / 2);
    std::map<Symbol, Expression> repl;
    for (const Symbol& s : symbols(pde.rhs())) {
        if (!(s.is_dependent() || s.is_jet()) || s.name() != pde.dependent().name()) continue;
        repl.emplace(s, e * Expression(s.is_jet() ? sym::jet(z, s.index()) : z));
    }
    Expression lhs = (substitute(pde.rhs(), repl) - k / 2 * e * Expression(z)) / e;
    if (depends_on(lhs, sym::t())) throw std::logic_error("time reduction left t in " + render(lhs));
    return StationaryEquation{pde.spatial(), z, lhs};
}

void check_reduction_binding(const ParameterBinding& b) {
    b.validate();
    if (auto w = b.get(sym::omega()); w && *w == 0)
        throw std::invalid_argument("R^2 = 4*S: the repeated-root case is out of scope (delta3/delta4 and "
                                    "delta5/delta6 coincide)");
    auto R = b.get(sym::R()), V = b.get(sym::V()), W = b.get(sym::W());
    if (R && V && W && *R * *V + *W == 0)
        throw std::invalid_argument("R*V + W = 0: K1, K2, K3, C(t) and E(t) are singular");
}

const PrintedReduction& printed_reduction(const std::string& generator) {
    static const std::map<std::string, PrintedReduction> table = [] {
        std::map<std::string, PrintedReduction> t;
        const Expression K1 = parse("(R - omega)/(2*(R*V + W))");
        const Expression K2 = parse("S/(R*V + W)");
        const Expression K3 = parse("(R + omega)/(2*(R*V + W))");
        const Expression R(sym::R()), W(sym::W()), x(sym::x()), y(sym::y());
        const Expression half(make_rational(1, 2));
        t["delta3"] = {parse("(R + omega)*y + 2*x"), Expression(0), {}, "reduced-3.2"};
        t["delta4"] = {parse("(-R + omega)*y - 2*x"), Expression(0), {}, "reduced-3.5"};
        t["delta5"] = {K1 * W * y - x, (K1 * W * y - x) * R * K1 * y - half * R * (K1 * K1 * W + K2) * y * y,
                       {{"K1", K1}, {"K2", K2}}, "reduced-3.7"};
        t["delta6"] = {K3 * W * y - x, (K3 * W * y - x) * R * K3 * y - half * R * (K3 * K3 * W + K2) * y * y,
                       {{"K3", K3}, {"K2", K2}}, "reduced-3.9"};
        return t;
    }();
    auto it = table.find(generator);
    if (it == table.end())
        throw std::invalid_argument("no printed reduction for '" + generator + "'; expected delta3..delta6");
    return it->second;
}

ReductionMap fixture_map(const SymmetryFixture& fixture, const std::string& generator) {
    const PrintedReduction& pr = printed_reduction(generator);
    ReductionMap map = invariants_for(fixture[generator], pr.invariant);
    map.constants = pr.constants;
    return map;
}

std::vector<TermComparison> compare_with_transcription(const ReducedEquation& derived, const EquationEntry& entry) {
    if (!entry.evolution) throw std::invalid_argument("transcribed entry is not an evolution equation");
    const Expression& factor = entry.printed_factor;
    std::vector<TermComparison> out;
    for (const char* j : {"z", "z_r", "z_rr"}) {
        Symbol s = parse(j).symbol();
        TermComparison tc;
        tc.jet = s;
        tc.derived = factor * partial(derived.pde.rhs(), s);
        tc.printed = factor * partial(entry.evolution->rhs(), s);
        tc.match = tc.derived == tc.printed;
        out.push_back(std::move(tc));
    }
    return out;
}

} // namespace liesym
