#include "expression_internal.hpp"

#include <algorithm>
#include <ostream>

namespace liesym {

using detail::n_add;
using detail::n_const;
using detail::n_mul;
using detail::Normal;
using detail::Poly;
using detail::SKey;

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::shared_ptr<Expression::Node> make_node(ExprKind kind) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    return n;
}

const Expression& zero_expression() {
    static const Expression z = from_normal(Normal{});
    return z;
}

Normal compute_normal(const Expression& e) {
    switch (e.kind()) {
    case ExprKind::Number:
        return n_const(e.value());
    case ExprKind::Atom:
    case ExprKind::Jet:
        return detail::n_symbol(e.symbol());
    case ExprKind::Sum: {
        Normal acc;
        for (auto& t : e.operands()) acc = n_add(acc, *normal_of(t));
        return acc;
    }
    case ExprKind::Product: {
        Normal acc = n_const(1);
        for (auto& f : e.operands()) acc = n_mul(acc, *normal_of(f));
        return acc;
    }
    case ExprKind::Power:
        return detail::n_pow(*normal_of(e.operands()[0]), e.exponent());
    case ExprKind::Exp:
        return detail::n_exp(*normal_of(e.operands()[0]));
    }
    throw std::logic_error("unreachable expression kind");
}

Expression atom_power(const Symbol& s, long e) {
    Expression a = Expression::raw_atom(s);
    return e == 1 ? a : Expression::raw_power(a, e);
}

Expression wrap(std::vector<Expression> parts, bool product) {
    if (parts.empty()) return Expression::raw_number(product ? 1 : 0);
    if (parts.size() == 1) return parts[0];
    return product ? Expression::raw_product(std::move(parts)) : Expression::raw_sum(std::move(parts));
}

Expression build_tree(const Normal& n) {
    if (n.is_zero()) return Expression::raw_number(0);
    detail::PMono den_mono;
    std::optional<Expression> den_factor;
    if (!n.den.is_constant()) {
        if (n.den.terms().size() == 1) {
            den_mono = n.den.terms()[0].first; // monic, so the coefficient is 1
        } else {
            Normal dn;
            dn.num.emplace_back(SKey{}, n.den);
            den_factor = Expression::raw_power(from_normal(std::move(dn)), -1);
        }
    }
    std::vector<Expression> terms;
    for (auto& [key, coeff] : n.num) {
        for (auto& [pm, q] : coeff.terms()) {
            std::vector<Expression> f;
            if (q != 1) f.push_back(Expression::raw_number(q));
            // parameter monomial with the monomial denominator merged in
            std::map<Symbol, long> params;
            for (auto& [s, e] : pm) params[s] += e;
            for (auto& [s, e] : den_mono) params[s] -= e;
            for (auto& [s, e] : params)
                if (e != 0) f.push_back(atom_power(s, e));
            for (auto& [s, e] : key.powers) f.push_back(atom_power(s, e));
            for (auto& [p, e] : key.opaque) f.push_back(Expression::raw_power(from_normal(*p), e));
            if (den_factor) f.push_back(*den_factor);
            if (key.exp_arg) f.push_back(Expression::raw_exp(from_normal(*key.exp_arg)));
            if (f.size() > 1 && f[0].kind() == ExprKind::Number && f[0].value() == 1) f.erase(f.begin());
            terms.push_back(wrap(std::move(f), true));
        }
    }
    return wrap(std::move(terms), false);
}

Expression substitute_tree(const Expression& e, const std::map<Symbol, Expression>& repl) {
    switch (e.kind()) {
    case ExprKind::Number:
        return e;
    case ExprKind::Atom:
    case ExprKind::Jet: {
        auto it = repl.find(e.symbol());
        return it == repl.end() ? e : it->second;
    }
    case ExprKind::Power:
        return Expression::raw_power(substitute_tree(e.operands()[0], repl), e.exponent());
    case ExprKind::Exp:
        return Expression::raw_exp(substitute_tree(e.operands()[0], repl));
    case ExprKind::Sum:
    case ExprKind::Product: {
        std::vector<Expression> ops;
        ops.reserve(e.operands().size());
        for (auto& o : e.operands()) ops.push_back(substitute_tree(o, repl));
        return e.kind() == ExprKind::Sum ? Expression::raw_sum(std::move(ops))
                                         : Expression::raw_product(std::move(ops));
    }
    }
    throw std::logic_error("unreachable expression kind");
}

} // namespace

std::shared_ptr<const Normal> normal_of(const Expression& e) {
    if (e.node_->normal) return e.node_->normal;
    return std::make_shared<const Normal>(compute_normal(e));
}

Expression from_normal(Normal n) {
    auto normal = std::make_shared<const Normal>(std::move(n));
    Expression tree = build_tree(*normal);
    auto node = std::make_shared<Expression::Node>(*tree.node_);
    node->normal = std::move(normal);
    return Expression(std::shared_ptr<const Expression::Node>(std::move(node)));
}

Expression::Expression() : Expression(zero_expression()) {}
Expression::Expression(int value) : Expression(Rational(value)) {}
Expression::Expression(long value) : Expression(Rational(value)) {}
Expression::Expression(const Rational& value) : Expression(from_normal(n_const(value))) {}
Expression::Expression(const Symbol& symbol) : Expression(from_normal(detail::n_symbol(symbol))) {}

Expression Expression::raw_number(const Rational& value) {
    auto n = make_node(ExprKind::Number);
    n->value = value;
    return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression Expression::raw_atom(const Symbol& symbol) {
    auto n = make_node(symbol.is_jet() ? ExprKind::Jet : ExprKind::Atom);
    n->symbol = symbol;
    return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression Expression::raw_sum(std::vector<Expression> terms) {
    auto n = make_node(ExprKind::Sum);
    n->operands = std::move(terms);
    return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression Expression::raw_product(std::vector<Expression> factors) {
    auto n = make_node(ExprKind::Product);
    n->operands = std::move(factors);
    return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression Expression::raw_power(Expression base, long exponent) {
    auto n = make_node(ExprKind::Power);
    n->operands.push_back(std::move(base));
    n->exponent = exponent;
    return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression Expression::raw_exp(Expression argument) {
    auto n = make_node(ExprKind::Exp);
    n->operands.push_back(std::move(argument));
    return Expression(std::shared_ptr<const Node>(std::move(n)));
}

ExprKind Expression::kind() const { return node_->kind; }
const Rational& Expression::value() const { return node_->value; }
const Symbol& Expression::symbol() const { return node_->symbol; }
const std::vector<Expression>& Expression::operands() const { return node_->operands; }
long Expression::exponent() const { return node_->exponent; }
bool Expression::is_canonical() const { return node_->normal != nullptr; }
bool Expression::is_zero() const { return normal_of(*this)->is_zero(); }

bool Expression::is_one() const {
    auto q = as_rational();
    return q && *q == 1;
}

std::optional<Rational> Expression::as_rational() const { return normal_of(*this)->rational(); }

bool Expression::is_coefficient() const {
    std::set<Symbol> s;
    detail::collect_symbols(*normal_of(*this), s);
    return std::none_of(s.begin(), s.end(), [](const Symbol& x) { return !x.is_coefficient(); }) &&
           normal_of(*this)->is_coefficient();
}

std::string Expression::str() const { return render(*this); }

Expression operator+(const Expression& a, const Expression& b) {
    return from_normal(n_add(*normal_of(a), *normal_of(b)));
}
Expression operator-(const Expression& a, const Expression& b) {
    return from_normal(n_add(*normal_of(a), detail::n_neg(*normal_of(b))));
}
Expression operator*(const Expression& a, const Expression& b) {
    return from_normal(n_mul(*normal_of(a), *normal_of(b)));
}
Expression operator/(const Expression& a, const Expression& b) {
    return from_normal(n_mul(*normal_of(a), detail::n_inverse(*normal_of(b))));
}
Expression Expression::operator-() const { return from_normal(detail::n_neg(*normal_of(*this))); }

bool operator==(const Expression& a, const Expression& b) {
    if (a.node_ == b.node_) return true;
    return *normal_of(a) == *normal_of(b);
}

std::strong_ordering operator<=>(const Expression& a, const Expression& b) {
    return detail::compare(*normal_of(a), *normal_of(b));
}

Expression pow(const Expression& base, long exponent) {
    return from_normal(detail::n_pow(*normal_of(base), exponent));
}

Expression exp(const Expression& argument) { return from_normal(detail::n_exp(*normal_of(argument))); }
Expression inverse(const Expression& e) { return from_normal(detail::n_inverse(*normal_of(e))); }
Expression omega() { return Expression(sym::omega()); }

Expression simplify(const Expression& e) {
    if (e.is_canonical()) return e;
    return from_normal(*normal_of(e));
}

Expression partial(const Expression& e, const Symbol& s) {
    return from_normal(detail::n_partial(*normal_of(e), s));
}

Expression differentiate(const Expression& e, const Symbol& v) {
    if (!v.is_independent())
        throw std::invalid_argument("differentiate: '" + v.text() + "' is not an independent-variable atom");
    auto syms = symbols(e);
    for (auto& s : syms)
        if (s.is_jet())
            throw std::invalid_argument("differentiate: expression contains jet variable '" + s.text() +
                                        "'; use total_derivative");
    Normal d = detail::n_partial(*normal_of(e), v);
    if (v.name() == "t") {
        for (auto& s : syms) {
            if (!s.is_function()) continue;
            Normal ds = detail::n_partial(*normal_of(e), s);
            if (ds.is_zero()) continue;
            d = n_add(d, n_mul(ds, detail::n_symbol(sym::function(s.name(), s.derivative_order() + 1))));
        }
    }
    return from_normal(std::move(d));
}

Expression substitute(const Expression& e, const std::map<Symbol, Expression>& replacements) {
    if (replacements.empty()) return simplify(e);
    return simplify(substitute_tree(e, replacements));
}

Expression substitute(const Expression& e, const Symbol& target, const Expression& replacement) {
    return substitute(e, std::map<Symbol, Expression>{{target, replacement}});
}

Rational evaluate(const Expression& e, const std::map<Symbol, Rational>& values) {
    switch (e.kind()) {
    case ExprKind::Number:
        return e.value();
    case ExprKind::Atom:
    case ExprKind::Jet: {
        auto it = values.find(e.symbol());
        if (it == values.end()) throw std::out_of_range("no value for symbol '" + e.symbol().text() + "'");
        return it->second;
    }
    case ExprKind::Sum: {
        Rational acc = 0;
        for (auto& t : e.operands()) acc += evaluate(t, values);
        return acc;
    }
    case ExprKind::Product: {
        Rational acc = 1;
        for (auto& f : e.operands()) acc *= evaluate(f, values);
        return acc;
    }
    case ExprKind::Power: {
        Rational b = evaluate(e.operands()[0], values);
        long k = e.exponent();
        if (k < 0) {
            if (b == 0) throw DivisionByZero("evaluate: zero raised to a negative power");
            b = 1 / b;
            k = -k;
        }
        Rational acc = 1;
        for (long i = 0; i < k; ++i) acc *= b;
        return acc;
    }
    case ExprKind::Exp: {
        Rational a = evaluate(e.operands()[0], values);
        if (a != 0) throw NonRationalValue("evaluate: exp of a nonzero value is not rational");
        return 1;
    }
    }
    throw std::logic_error("unreachable expression kind");
}

std::set<Symbol> symbols(const Expression& e) {
    std::set<Symbol> out;
    detail::collect_symbols(*normal_of(e), out);
    return out;
}

bool depends_on(const Expression& e, const Symbol& s) { return symbols(e).count(s) > 0; }

Truth equal(const Expression& a, const Expression& b) {
    if (a == b) return Truth::True;
    if (normal_of(a)->has_opaque() || normal_of(b)->has_opaque()) {
        if ((a - b).is_zero()) return Truth::True;
        return Truth::Unknown;
    }
    return Truth::False;
}

std::vector<PolynomialTerm> collect(const Expression& e, const std::vector<Symbol>& variables) {
    auto n = normal_of(e);
    std::map<std::vector<int>, Normal> groups;
    for (auto& [key, coeff] : n->num) {
        std::vector<int> expo(variables.size(), 0);
        SKey rest;
        rest.opaque = key.opaque;
        rest.exp_arg = key.exp_arg;
        for (auto& [s, k] : key.powers) {
            auto it = std::find(variables.begin(), variables.end(), s);
            if (it == variables.end()) {
                rest.powers.emplace_back(s, k);
                continue;
            }
            if (k < 0) throw NonPolynomial("negative power of '" + s.text() + "'");
            expo[static_cast<std::size_t>(it - variables.begin())] = k;
        }
        std::set<Symbol> inner;
        for (auto& [p, k] : key.opaque) detail::collect_symbols(*p, inner);
        if (key.exp_arg) detail::collect_symbols(*key.exp_arg, inner);
        for (auto& v : variables)
            if (inner.count(v)) throw NonPolynomial("'" + v.text() + "' occurs inside a non-polynomial factor");
        detail::NumMap m;
        m.emplace(std::move(rest), coeff);
        Normal term = detail::make_normal(std::move(m), n->den);
        auto it = groups.find(expo);
        if (it == groups.end())
            groups.emplace(expo, std::move(term));
        else
            it->second = n_add(it->second, term);
    }
    std::vector<PolynomialTerm> out;
    for (auto& [expo, nf] : groups) out.push_back({expo, from_normal(nf)});
    std::sort(out.begin(), out.end(), [](const PolynomialTerm& a, const PolynomialTerm& b) {
        int da = 0, db = 0;
        for (int k : a.exponents) da += k;
        for (int k : b.exponents) db += k;
        if (da != db) return da < db;
        return a.exponents > b.exponents;
    });
    return out;
}

std::vector<std::pair<Expression, Expression>> structural_terms(const Expression& e) {
    auto n = normal_of(e);
    std::vector<std::pair<Expression, Expression>> out;
    for (auto& [key, coeff] : n->num) {
        detail::NumMap mk;
        mk.emplace(key, Poly(Rational(1)));
        detail::NumMap mc;
        mc.emplace(SKey{}, coeff);
        out.emplace_back(from_normal(detail::make_normal(std::move(mk), Poly(Rational(1)))),
                         from_normal(detail::make_normal(std::move(mc), n->den)));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Expression& e) { return os << render(e); }

} // namespace liesym
