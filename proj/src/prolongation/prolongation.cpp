#include "liesym/prolongation.hpp"

#include <stdexcept>

namespace liesym {

namespace {

Symbol axis_symbol(int a) {
    static const Symbol vars[] = {sym::t(), sym::x(), sym::y(), sym::r()};
    return vars[a];
}

/// Characteristic Q = eta - sum_i xi^i u_i.
Expression characteristic(const VectorField& vf) {
    Expression q = vf.eta();
    for (std::size_t i = 0; i < vf.independents().size(); ++i)
        q -= vf.xi()[i] * Expression(sym::jet_shift(vf.dependent(), sym::axis_of(vf.independents()[i])));
    return q;
}

bool on_variables(const VectorField& vf, const Symbol& jet) {
    for (int a = 0; a < 4; ++a) {
        if (jet.index()[a] == 0) continue;
        bool found = false;
        for (auto& v : vf.independents()) found = found || sym::axis_of(v) == static_cast<Axis>(a);
        if (!found) return false;
    }
    return true;
}

} // namespace

Expression extended_coefficient(const VectorField& vf, const Symbol& jet) {
    if (!jet.is_jet() || jet.name() != vf.dependent().name())
        throw std::invalid_argument("'" + jet.text() + "' is not a jet of " + vf.dependent().text());
    if (!on_variables(vf, jet)) throw std::invalid_argument("jet " + jet.text() + " uses a variable the field lacks");
    Expression out = characteristic(vf);
    for (int a = 0; a < 4; ++a)
        for (int k = 0; k < jet.index()[a]; ++k) out = total_derivative(out, axis_symbol(a));
    for (std::size_t i = 0; i < vf.independents().size(); ++i) {
        if (vf.xi()[i].is_zero()) continue;
        out += vf.xi()[i] * Expression(sym::jet_shift(jet, sym::axis_of(vf.independents()[i])));
    }
    return out;
}

std::map<Symbol, Expression> prolong2(const VectorField& vf) {
    std::map<Symbol, Expression> out;
    const auto& vars = vf.independents();
    for (auto& v : vars) {
        Symbol j = sym::jet_shift(vf.dependent(), sym::axis_of(v));
        out.emplace(j, extended_coefficient(vf, j));
    }
    for (std::size_t i = 1; i < vars.size(); ++i)
        for (std::size_t k = i; k < vars.size(); ++k) {
            Symbol j = sym::jet_shift(sym::jet_shift(vf.dependent(), sym::axis_of(vars[i])), sym::axis_of(vars[k]));
            out.emplace(j, extended_coefficient(vf, j));
        }
    return out;
}

Expression residual(const VectorField& vf, const EvolutionPDE& pde) {
    if (vf.independents() != pde.independents() || vf.dependent() != pde.dependent())
        throw std::invalid_argument("vector field and equation use different variables");
    const Expression& F = pde.rhs();
    Expression action = -extended_coefficient(vf, pde.time_jet());
    for (std::size_t i = 0; i < vf.independents().size(); ++i)
        if (!vf.xi()[i].is_zero()) action += vf.xi()[i] * partial(F, vf.independents()[i]);
    action += vf.eta() * partial(F, pde.dependent());
    for (const Symbol& s : symbols(F)) {
        if (!s.is_jet()) continue;
        Expression dF = partial(F, s);
        if (!dF.is_zero()) action += extended_coefficient(vf, s) * dF;
    }
    return eliminate_time_jets(action, pde);
}

std::string monomial_text(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (auto& [s, k] : m) {
        if (!out.empty()) out += "*";
        out += s.text();
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

DeterminingSystem split_residual(const Expression& res, const EvolutionPDE& pde) {
    std::vector<Symbol> jets;
    for (const Symbol& s : symbols(res))
        if ((s.is_jet() || s.is_dependent()) && s.name() == pde.dependent().name()) jets.push_back(s);
    for (const Symbol& s : jets)
        if (s.is_jet() && s.count(Axis::T) > 0)
            throw std::logic_error("time-derivative jet survived elimination: " + s.text());
    const std::vector<Symbol> points = pde.spatial();
    DeterminingSystem sys;
    auto to_monomial = [](const std::vector<Symbol>& vars, const std::vector<int>& ex) {
        Monomial m;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (ex[i] != 0) m.emplace_back(vars[i], ex[i]);
        return m;
    };
    for (auto& jt : collect(res, jets)) {
        Monomial jm = to_monomial(jets, jt.exponents);
        sys.by_jet.emplace_back(jm, jt.coefficient);
        for (auto& pt : collect(jt.coefficient, points))
            if (!pt.coefficient.is_zero())
                sys.equations.push_back({jm, to_monomial(points, pt.exponents), pt.coefficient});
    }
    return sys;
}

DeterminingSystem determining_equations(const VectorField& ansatz, const EvolutionPDE& pde) {
    return split_residual(residual(ansatz, pde), pde);
}

} // namespace liesym
