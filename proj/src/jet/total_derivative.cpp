#include "liesym/pde.hpp"

#include <stdexcept>

namespace liesym {

Expression total_derivative(const Expression& e, const Symbol& v) {
    if (!v.is_independent()) throw std::invalid_argument("total derivative: '" + v.text() + "' is not independent");
    const Axis axis = sym::axis_of(v);
    Expression out = partial(e, v);
    for (const Symbol& s : symbols(e)) {
        if (s.is_function()) {
            if (axis == Axis::T) out += partial(e, s) * Expression(sym::function(s.name(), s.derivative_order() + 1));
            continue;
        }
        if (!s.is_dependent() && !s.is_jet()) continue;
        Expression d = partial(e, s);
        if (d.is_zero()) continue;
        int order = s.is_jet() ? s.jet_order() : 0;
        if (order + 1 > kMaxJetOrder)
            throw JetOrderOverflow("jet order overflow: D_" + v.text() + "(" + s.text() + ") exceeds order " +
                                   std::to_string(kMaxJetOrder));
        out += d * Expression(sym::jet_shift(s, axis));
    }
    return out;
}

Expression time_jet_value(const Symbol& jet, const EvolutionPDE& pde) {
    if (!jet.is_jet() || jet.count(Axis::T) == 0 || jet.name() != pde.dependent().name())
        throw std::invalid_argument("'" + jet.text() + "' is not a time-derivative jet of the equation");
    Expression value = pde.rhs();
    for (int k = 1; k < jet.count(Axis::T); ++k)
        value = eliminate_time_jets(total_derivative(value, sym::t()), pde);
    static const Symbol spatial_axes[] = {sym::t(), sym::x(), sym::y(), sym::r()};
    for (int a = 1; a < 4; ++a)
        for (int k = 0; k < jet.index()[a]; ++k) {
            try {
                value = total_derivative(value, spatial_axes[a]);
            } catch (const JetOrderOverflow&) {
                throw JetOrderOverflow("jet order overflow: eliminating " + jet.text() + " needs derivatives above order " +
                                       std::to_string(kMaxJetOrder));
            }
        }
    return value;
}

Expression eliminate_time_jets(const Expression& e, const EvolutionPDE& pde) {
    std::map<Symbol, Expression> repl;
    for (const Symbol& s : symbols(e))
        if (s.is_jet() && s.count(Axis::T) > 0 && s.name() == pde.dependent().name())
            repl.emplace(s, time_jet_value(s, pde));
    if (repl.empty()) return e;
    return substitute(e, repl);
}

Expression total_derivative(const Expression& e, const Symbol& v, const EvolutionPDE& pde) {
    return eliminate_time_jets(total_derivative(eliminate_time_jets(e, pde), v), pde);
}

} // namespace liesym
