#pragma once

#include "liesym/expression.hpp"
#include "normal.hpp"

namespace liesym {

struct Expression::Node {
    ExprKind kind = ExprKind::Number;
    Rational value;
    Symbol symbol;
    std::vector<Expression> operands;
    long exponent = 0;
    std::shared_ptr<const detail::Normal> normal; // set iff the tree is canonical
};

/// Normal form of any tree (computed when the tree is raw).
std::shared_ptr<const detail::Normal> normal_of(const Expression& e);
/// Canonical tree for a normal form.
Expression from_normal(detail::Normal n);

} // namespace liesym
