#include "liesym/expression.hpp"

namespace liesym {

namespace {

std::string render_node(const Expression& e);

bool is_negative_term(const Expression& e) {
    if (e.kind() == ExprKind::Number) return e.value() < 0;
    if (e.kind() == ExprKind::Product && !e.operands().empty()) {
        const auto& f = e.operands()[0];
        return f.kind() == ExprKind::Number && f.value() < 0;
    }
    return false;
}

std::string render_factor(const Expression& f, bool first) {
    switch (f.kind()) {
    case ExprKind::Sum:
        return "(" + render_node(f) + ")";
    case ExprKind::Product:
        return "(" + render_node(f) + ")";
    case ExprKind::Number:
        if (!first && (f.value() < 0 || !is_integer(f.value()))) return "(" + to_string(f.value()) + ")";
        return to_string(f.value());
    default:
        return render_node(f);
    }
}

std::string render_product(const std::vector<Expression>& fs) {
    std::string out;
    std::size_t start = 0;
    if (!fs.empty() && fs[0].kind() == ExprKind::Number && fs[0].value() == -1 && fs.size() > 1) {
        out = "-";
        start = 1;
    }
    for (std::size_t i = start; i < fs.size(); ++i) {
        if (i > start) out += "*";
        out += render_factor(fs[i], i == 0);
    }
    return out;
}

/// Renders |e| for a term flagged by is_negative_term.
std::string render_abs(const Expression& e) {
    if (e.kind() == ExprKind::Number) return to_string(Rational(-e.value()));
    std::vector<Expression> fs = e.operands();
    Rational q = -fs[0].value();
    if (q == 1)
        fs.erase(fs.begin());
    else
        fs[0] = Expression::raw_number(q);
    if (fs.size() == 1) return render_factor(fs[0], true);
    return render_product(fs);
}

std::string render_node(const Expression& e) {
    switch (e.kind()) {
    case ExprKind::Number:
        return to_string(e.value());
    case ExprKind::Atom:
    case ExprKind::Jet:
        return e.symbol().text();
    case ExprKind::Sum: {
        std::string out;
        bool first = true;
        for (auto& t : e.operands()) {
            if (first) {
                out = render_node(t);
                first = false;
            } else if (is_negative_term(t)) {
                out += " - " + render_abs(t);
            } else {
                out += " + " + render_node(t);
            }
        }
        return out.empty() ? "0" : out;
    }
    case ExprKind::Product:
        return e.operands().empty() ? "1" : render_product(e.operands());
    case ExprKind::Power: {
        const auto& b = e.operands()[0];
        std::string base = render_node(b);
        bool wrap = b.kind() == ExprKind::Sum || b.kind() == ExprKind::Product || b.kind() == ExprKind::Power ||
                    (b.kind() == ExprKind::Number && (b.value() < 0 || !is_integer(b.value())));
        if (wrap) base = "(" + base + ")";
        return base + "^" + std::to_string(e.exponent());
    }
    case ExprKind::Exp:
        return "exp(" + render_node(e.operands()[0]) + ")";
    }
    return {};
}

} // namespace

std::string render(const Expression& e) { return render_node(e); }

} // namespace liesym
