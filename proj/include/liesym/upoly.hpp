#pragma once

#include "liesym/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liesym {

/// Univariate polynomial over Q in the symbol s; coefficient k multiplies s^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coefficients);
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly monomial(const Rational& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    Rational coefficient(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational operator()(const Rational& s) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; throws std::domain_error for a zero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots; // ascending, with multiplicity
    int remaining_degree = 0;                    // degree of the factor without rational roots
};

/// All rational roots by the rational root theorem, with multiplicities.
RationalRoots rational_roots(const UPoly& p);

} // namespace liesym
