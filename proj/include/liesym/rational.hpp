#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace liesym {

/// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational make_rational(long n, long d) {
    Rational q(n, d);
    if (d == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact rational square root when `q` is a perfect square, else false.
bool exact_sqrt(const Rational& q, Rational& root);

} // namespace liesym
