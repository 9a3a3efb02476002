#include "liesym/symbol.hpp"

#include <stdexcept>

namespace liesym {

namespace {

constexpr std::string_view kAxisLetters = "txyr";

int independent_rank(const std::string& n) {
    auto p = kAxisLetters.find(n);
    return n.size() == 1 && p != std::string_view::npos ? static_cast<int>(p) : 4;
}

} // namespace

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == SymbolKind::Independent) {
        if (auto c = independent_rank(a.name_) <=> independent_rank(b.name_); c != 0) return c;
    }
    if (auto c = a.name_ <=> b.name_; c != 0) return c;
    if (a.kind_ == SymbolKind::Jet) {
        if (auto c = a.jet_order() <=> b.jet_order(); c != 0) return c;
        // graded, then more t-derivatives first: u_t < u_x < u_y, u_tx < u_xx < u_xy
        return b.index_ <=> a.index_;
    }
    return a.index_ <=> b.index_;
}

std::string Symbol::text() const {
    switch (kind_) {
    case SymbolKind::Jet: {
        std::string s = name_ + "_";
        for (int a = 0; a < 4; ++a) s.append(index_[a], kAxisLetters[a]);
        return s;
    }
    case SymbolKind::Function: {
        int k = index_[0];
        if (k <= 3) return name_ + std::string(k, '\'') + "(t)";
        return name_ + "^(" + std::to_string(k) + ")(t)";
    }
    default:
        return name_;
    }
}

namespace sym {

Symbol t() { return {SymbolKind::Independent, "t"}; }
Symbol x() { return {SymbolKind::Independent, "x"}; }
Symbol y() { return {SymbolKind::Independent, "y"}; }
Symbol r() { return {SymbolKind::Independent, "r"}; }
Symbol u() { return {SymbolKind::Dependent, "u"}; }
Symbol z() { return {SymbolKind::Dependent, "z"}; }
Symbol R() { return {SymbolKind::Parameter, "R"}; }
Symbol S() { return {SymbolKind::Parameter, "S"}; }
Symbol V() { return {SymbolKind::Parameter, "V"}; }
Symbol W() { return {SymbolKind::Parameter, "W"}; }
Symbol omega() { return {SymbolKind::Surd, "omega"}; }
Symbol constant(std::string name) { return {SymbolKind::Constant, std::move(name)}; }

Symbol function(std::string name, int derivative_order) {
    if (derivative_order < 0 || derivative_order > 255)
        throw std::invalid_argument("function derivative order out of range");
    return {SymbolKind::Function, std::move(name),
            MultiIndex{static_cast<std::uint8_t>(derivative_order), 0, 0, 0}};
}

Symbol jet(const Symbol& dependent, MultiIndex index) {
    if (!dependent.is_dependent()) throw std::invalid_argument("jet base must be a dependent symbol");
    if (index == MultiIndex{}) return dependent;
    return {SymbolKind::Jet, dependent.name(), index};
}

Axis axis_of(const Symbol& independent) {
    if (!independent.is_independent())
        throw std::invalid_argument("'" + independent.text() + "' is not an independent variable");
    auto p = kAxisLetters.find(independent.name());
    if (independent.name().size() != 1 || p == std::string_view::npos)
        throw std::invalid_argument("unknown independent variable '" + independent.name() + "'");
    return static_cast<Axis>(p);
}

Symbol jet_shift(const Symbol& base, Axis a) {
    MultiIndex idx{};
    std::string dep;
    if (base.is_dependent()) {
        dep = base.name();
    } else if (base.is_jet()) {
        dep = base.name();
        idx = base.index();
    } else {
        throw std::invalid_argument("'" + base.text() + "' is not a jet coordinate");
    }
    idx[static_cast<int>(a)] += 1;
    return Symbol(SymbolKind::Jet, dep, idx);
}

} // namespace sym

} // namespace liesym
