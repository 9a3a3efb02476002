#include "liesym/parameters.hpp"

#include <sstream>
#include <stdexcept>

namespace liesym {

namespace {

Symbol parameter_named(std::string_view name) {
    if (name == "R") return sym::R();
    if (name == "S") return sym::S();
    if (name == "V") return sym::V();
    if (name == "W") return sym::W();
    if (name == "omega") return sym::omega();
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'; expected one of R, S, V, W, omega");
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

ParameterBinding ParameterBinding::parse(std::string_view text) {
    ParameterBinding b;
    std::string item;
    auto flush = [&] {
        std::string it = trim(item);
        item.clear();
        if (it.empty()) return;
        auto eq = it.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("binding entry '" + it + "' lacks '='");
        Symbol p = parameter_named(trim(std::string_view(it).substr(0, eq)));
        if (b.has(p)) throw std::invalid_argument("parameter bound twice: " + p.text());
        b.values_[p] = parse_rational(trim(std::string_view(it).substr(eq + 1)));
    };
    for (char c : text) {
        if (c == ',' || c == ';')
            flush();
        else
            item += c;
    }
    flush();
    b.complete();
    b.validate();
    return b;
}

void ParameterBinding::set(const Symbol& parameter, const Rational& value) {
    if (parameter.kind() != SymbolKind::Parameter && parameter.kind() != SymbolKind::Surd)
        throw std::invalid_argument("not a parameter: " + parameter.text());
    values_[parameter] = value;
    complete();
}

std::optional<Rational> ParameterBinding::get(const Symbol& parameter) const {
    auto it = values_.find(parameter);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void ParameterBinding::complete() {
    auto R = get(sym::R()), S = get(sym::S());
    if (!R || !S || has(sym::omega())) return;
    Rational disc = *R * *R - 4 * *S;
    Rational root;
    if (disc >= 0 && exact_sqrt(disc, root)) values_[sym::omega()] = root;
}

void ParameterBinding::validate() const {
    auto R = get(sym::R()), S = get(sym::S()), w = get(sym::omega());
    if (R && S) {
        Rational disc = *R * *R - 4 * *S;
        if (disc < 0) throw std::invalid_argument("binding violates R^2 - 4*S >= 0 (got " + to_string(disc) + ")");
        if (w && *w * *w != disc)
            throw std::invalid_argument("binding violates omega^2 = R^2 - 4*S (omega=" + to_string(*w) +
                                        ", R^2-4*S=" + to_string(disc) + ")");
    }
    if (w && *w < 0) throw std::invalid_argument("omega must be the non-negative root");
}

void ParameterBinding::require_discovery_ready() const {
    validate();
    for (const Symbol& p : {sym::R(), sym::S(), sym::V(), sym::W()})
        if (!has(p)) throw std::invalid_argument("binding must give a value for " + p.text());
    if (!has(sym::omega())) {
        Rational disc = *get(sym::R()) * *get(sym::R()) - 4 * *get(sym::S());
        throw std::invalid_argument("R^2 - 4*S = " + to_string(disc) +
                                    " is not a perfect rational square; choose R, S with a perfect-square discriminant");
    }
    if (*get(sym::R()) * *get(sym::V()) + *get(sym::W()) == 0)
        throw std::invalid_argument("binding violates R*V + W != 0");
}

Expression ParameterBinding::apply(const Expression& e) const {
    std::map<Symbol, Expression> repl;
    for (auto& [s, v] : values_) repl.emplace(s, Expression(v));
    Expression out = substitute(e, repl);
    // With omega left symbolic, omega^2 products rewrite back to R^2 - 4S.
    if (!has(sym::omega()) && (has(sym::R()) || has(sym::S()))) out = substitute(out, repl);
    return out;
}

std::string ParameterBinding::str() const {
    std::ostringstream os;
    bool first = true;
    for (const Symbol& p : {sym::R(), sym::S(), sym::V(), sym::W(), sym::omega()}) {
        auto v = get(p);
        if (!v) continue;
        if (!first) os << ",";
        os << p.text() << "=" << to_string(*v);
        first = false;
    }
    return os.str();
}

} // namespace liesym
