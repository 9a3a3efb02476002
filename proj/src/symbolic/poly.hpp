#pragma once

// Sparse multivariate polynomials over Q in the coefficient symbols
// (parameters, the surd, user constants). These are the coefficient ring of
// the expression normal form.

#include "liesym/rational.hpp"
#include "liesym/symbol.hpp"

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace liesym::detail {

/// Sorted (symbol, exponent > 0) list.
using PMono = std::vector<std::pair<Symbol, int>>;

/// Graded lexicographic order.
std::strong_ordering compare_mono(const PMono& a, const PMono& b);
PMono mono_mul(const PMono& a, const PMono& b);
int mono_degree(const PMono& m);

struct MonoLess {
    bool operator()(const PMono& a, const PMono& b) const { return compare_mono(a, b) < 0; }
};

class Poly {
public:
    using Term = std::pair<PMono, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly monomial(PMono m, const Rational& c);
    static Poly variable(const Symbol& s, int e = 1);
    static Poly from_map(std::map<PMono, Rational, MonoLess>&& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
    bool is_one() const;
    /// Value of a constant polynomial (0 when empty).
    Rational constant_value() const;
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient of the graded-lex largest monomial.
    const Rational& leading_coefficient() const { return terms_.back().second; }

    bool contains(const Symbol& s) const;
    int degree(const Symbol& s) const;
    std::optional<Symbol> main_variable() const;
    /// Collects by powers of `v`.
    std::map<int, Poly> coefficients(const Symbol& v) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    /// Free product: the surd is treated as an ordinary variable.
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;

    friend bool operator==(const Poly& a, const Poly& b) = default;
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

private:
    std::vector<Term> terms_; // ascending in compare_mono
};

/// R^2 - 4 S.
const Poly& discriminant();

/// Rewrites omega^k (k >= 2) using omega^2 = R^2 - 4 S.
Poly reduce_surd(const Poly& p);
inline Poly mul_reduced(const Poly& a, const Poly& b) { return reduce_surd(a * b); }

/// Divides by the leading coefficient (zero stays zero).
Poly monic(const Poly& p);

/// Exact division in Q[vars]; nullopt when `b` does not divide `a`.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Monic greatest common divisor in Q[vars] (surd treated as a free variable).
Poly gcd(const Poly& a, const Poly& b);

/// Pseudo-remainder of `a` by `b` with respect to `v`.
Poly pseudo_remainder(const Poly& a, const Poly& b, const Symbol& v);

} // namespace liesym::detail
