#include "liesym/pde.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym {

EvolutionPDE::EvolutionPDE(std::vector<Symbol> independents, Symbol dependent, Expression rhs, std::string name)
    : independents_(std::move(independents)), dependent_(std::move(dependent)), rhs_(simplify(rhs)),
      name_(std::move(name)) {
    if (independents_.empty() || independents_[0] != sym::t())
        throw std::invalid_argument("evolution equation: the first independent variable must be t");
    if (independents_.size() < 2) throw std::invalid_argument("evolution equation needs a spatial variable");
    for (auto& v : independents_)
        if (!v.is_independent()) throw std::invalid_argument("'" + v.text() + "' is not an independent variable");
    if (!dependent_.is_dependent()) throw std::invalid_argument("'" + dependent_.text() + "' is not a dependent symbol");
    for (const Symbol& s : symbols(rhs_)) {
        if (s.is_function()) throw std::invalid_argument("right-hand side contains an unknown function");
        if (s.is_independent() && std::find(independents_.begin(), independents_.end(), s) == independents_.end())
            throw std::invalid_argument("right-hand side uses '" + s.text() + "', not an independent variable here");
        if (s.is_dependent() && s != dependent_)
            throw std::invalid_argument("right-hand side uses a second dependent symbol '" + s.text() + "'");
        if (!s.is_jet()) continue;
        if (s.name() != dependent_.name())
            throw std::invalid_argument("right-hand side uses a jet of another dependent symbol: " + s.text());
        if (s.count(Axis::T) > 0) throw std::invalid_argument("right-hand side contains time derivative " + s.text());
        if (s.jet_order() > 2) throw std::invalid_argument("right-hand side is above second order: " + s.text());
        for (int a = 1; a < 4; ++a) {
            if (s.index()[a] == 0) continue;
            Symbol iv = a == 1 ? sym::x() : a == 2 ? sym::y() : sym::r();
            if (std::find(independents_.begin(), independents_.end(), iv) == independents_.end())
                throw std::invalid_argument("jet " + s.text() + " differentiates along a variable the equation lacks");
        }
    }
}

Symbol EvolutionPDE::time_jet() const { return sym::jet(dependent_, {1, 0, 0, 0}); }

int EvolutionPDE::spatial_order() const {
    int k = 0;
    for (const Symbol& s : symbols(rhs_))
        if (s.is_jet()) k = std::max(k, s.jet_order());
    return k;
}

EvolutionPDE EvolutionPDE::bind(const ParameterBinding& b) const {
    return EvolutionPDE(independents_, dependent_, b.apply(rhs_), name_);
}

EvolutionPDE EvolutionPDE::renamed(std::string name) const {
    EvolutionPDE out = *this;
    out.name_ = std::move(name);
    return out;
}

std::string EvolutionPDE::str() const { return time_jet().text() + " = " + render(rhs_); }

EvolutionPDE make_hpz() {
    return EvolutionPDE({sym::t(), sym::x(), sym::y()}, sym::u(),
                        parse("R*u - x*u_y + R*x*u_x + S*y*u_x + V*u_xy + W*u_xx"), "hpz");
}

EvolutionPDE make_heat() { return EvolutionPDE({sym::t(), sym::x()}, sym::u(), parse("u_xx"), "heat"); }

} // namespace liesym
