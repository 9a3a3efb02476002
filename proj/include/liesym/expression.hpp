#pragma once

#include "liesym/rational.hpp"
#include "liesym/symbol.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liesym {

namespace detail {
struct Normal;
}

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by evaluate() when a value is not a rational number (e.g. exp(1)).
class NonRationalValue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by collect() when the requested variables occur non-polynomially.
class NonPolynomial : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

enum class ExprKind { Number, Atom, Jet, Sum, Product, Power, Exp };

/// Immutable symbolic expression tree.
///
/// Trees built through the arithmetic operators, parse() or simplify() are
/// canonical: an expanded sum of products with the rational coefficient in
/// front, omega of degree at most one, exponentials merged, and rational
/// functions of the parameters reduced to lowest terms. The raw_* builders
/// produce unsimplified trees.
class Expression {
public:
    Expression();
    Expression(int value);
    Expression(long value);
    Expression(const Rational& value);
    Expression(const Symbol& symbol);

    static Expression raw_number(const Rational& value);
    static Expression raw_atom(const Symbol& symbol);
    static Expression raw_sum(std::vector<Expression> terms);
    static Expression raw_product(std::vector<Expression> factors);
    static Expression raw_power(Expression base, long exponent);
    static Expression raw_exp(Expression argument);

    ExprKind kind() const;
    const Rational& value() const;
    const Symbol& symbol() const;
    const std::vector<Expression>& operands() const;
    long exponent() const;

    bool is_canonical() const;
    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;
    /// True when no structural symbol (variables, dependents, jets, functions) occurs.
    bool is_coefficient() const;

    std::string str() const;

    friend Expression operator+(const Expression& a, const Expression& b);
    friend Expression operator-(const Expression& a, const Expression& b);
    friend Expression operator*(const Expression& a, const Expression& b);
    friend Expression operator/(const Expression& a, const Expression& b);
    Expression operator-() const;
    Expression& operator+=(const Expression& b) { return *this = *this + b; }
    Expression& operator-=(const Expression& b) { return *this = *this - b; }
    Expression& operator*=(const Expression& b) { return *this = *this * b; }

    /// Canonical identity.
    friend bool operator==(const Expression& a, const Expression& b);
    /// Total order on canonical forms.
    friend std::strong_ordering operator<=>(const Expression& a, const Expression& b);

    struct Node;

private:
    explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend std::shared_ptr<const detail::Normal> normal_of(const Expression& e);
    friend Expression from_normal(detail::Normal n);
};

Expression pow(const Expression& base, long exponent);
Expression exp(const Expression& argument);
Expression inverse(const Expression& e);

/// The surd atom omega, satisfying omega^2 = R^2 - 4S.
Expression omega();

Expression simplify(const Expression& e);

/// d/dv for an independent variable; unknown functions of t are
/// differentiated by the chain rule. Jet variables are rejected.
Expression differentiate(const Expression& e, const Symbol& v);

/// Partial derivative with every other symbol held fixed. Accepts any
/// structural symbol, including jets and the dependent variable.
Expression partial(const Expression& e, const Symbol& s);

/// Simultaneous syntactic substitution followed by simplify.
Expression substitute(const Expression& e, const std::map<Symbol, Expression>& replacements);
Expression substitute(const Expression& e, const Symbol& target, const Expression& replacement);

/// Exact evaluation of the tree as written. Throws std::out_of_range for an
/// unassigned symbol, DivisionByZero, or NonRationalValue for exp of a nonzero value.
Rational evaluate(const Expression& e, const std::map<Symbol, Rational>& values);

std::set<Symbol> symbols(const Expression& e);
bool depends_on(const Expression& e, const Symbol& s);

enum class Truth { False, True, Unknown };

/// Decides equality by canonical form. Unknown when an inverted sum of
/// structural terms is involved and the difference does not cancel.
Truth equal(const Expression& a, const Expression& b);

/// One term of an expression viewed as a polynomial in chosen variables.
struct PolynomialTerm {
    std::vector<int> exponents; // aligned with the variable list
    Expression coefficient;     // free of the chosen variables
};

/// Graded order: total degree ascending, then earlier variables first.
/// Throws NonPolynomial for negative powers or occurrences inside exp().
std::vector<PolynomialTerm> collect(const Expression& e, const std::vector<Symbol>& variables);

/// Splits into (structural monomial incl. exponential, coefficient-field
/// element) pairs. Distinct monomials are linearly independent over the
/// coefficient field for the expression class handled here.
std::vector<std::pair<Expression, Expression>> structural_terms(const Expression& e);

struct ParseOptions {
    std::vector<std::string> constants;
};

/// Parses and simplifies.
Expression parse(std::string_view text, const ParseOptions& options = {});
/// Parses without simplifying.
Expression parse_raw(std::string_view text, const ParseOptions& options = {});
std::string render(const Expression& e);

std::ostream& operator<<(std::ostream& os, const Expression& e);

} // namespace liesym
