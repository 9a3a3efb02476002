#pragma once

// Canonical normal form behind Expression.
//
// A normal form is  sum_k  c_k * m_k  /  d
// where each m_k is a structural key (powers of structural symbols, powers of
// opaque sums, an optional exponential), c_k is a polynomial in the
// coefficient symbols reduced modulo omega^2 = R^2 - 4S, and d is a monic
// omega-free polynomial coprime to the c_k. Two normal forms are equal iff
// they are structurally identical, except when opaque sums are involved.

#include "poly.hpp"

#include <compare>
#include <memory>
#include <set>

namespace liesym::detail {

struct Normal;
using NormalPtr = std::shared_ptr<const Normal>;

std::strong_ordering compare(const Normal& a, const Normal& b);

struct SKey {
    std::vector<std::pair<Symbol, int>> powers;     // sorted, nonzero exponents
    std::vector<std::pair<NormalPtr, int>> opaque;  // sorted by pointee, nonzero exponents
    NormalPtr exp_arg;                              // null when there is no exponential

    bool empty() const { return powers.empty() && opaque.empty() && !exp_arg; }
};

std::strong_ordering compare(const SKey& a, const SKey& b);

struct KeyLess {
    bool operator()(const SKey& a, const SKey& b) const { return compare(a, b) < 0; }
};

struct Normal {
    std::vector<std::pair<SKey, Poly>> num; // ascending keys, nonzero coefficients
    Poly den{Rational(1)};

    bool is_zero() const { return num.empty(); }
    /// True when there is no structural part (a pure coefficient-field element).
    bool is_coefficient() const { return num.empty() || (num.size() == 1 && num[0].first.empty()); }
    /// Rational value when the form is a plain number.
    std::optional<Rational> rational() const;
    bool has_opaque() const;
};

inline bool operator==(const Normal& a, const Normal& b) { return compare(a, b) == 0; }

using NumMap = std::map<SKey, Poly, KeyLess>;

Normal make_normal(NumMap&& num, Poly den);

Normal n_const(const Rational& c);
Normal n_symbol(const Symbol& s);
Normal n_add(const Normal& a, const Normal& b);
Normal n_neg(const Normal& a);
Normal n_mul(const Normal& a, const Normal& b);
Normal n_inverse(const Normal& a);
Normal n_pow(const Normal& a, long k);
Normal n_exp(const Normal& a);
/// Partial derivative with respect to a structural symbol.
Normal n_partial(const Normal& a, const Symbol& s);

void collect_symbols(const Normal& a, std::set<Symbol>& out);

} // namespace liesym::detail
