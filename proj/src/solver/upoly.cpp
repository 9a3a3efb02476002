#include "liesym/upoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace liesym {

UPoly::UPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& s) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> v = c_;
    Rational l = lead();
    for (auto& x : v) x /= l;
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly r = *this;
    std::vector<Rational> q(std::max(0, degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Rational f = r.lead() / d.lead();
        q[static_cast<std::size_t>(shift)] = f;
        r = r - UPoly::monomial(f, shift) * d;
    }
    return {UPoly(std::move(q)), r};
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        std::string mono = k == 0 ? "" : k == 1 ? "s" : "s^" + std::to_string(k);
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + "*" + mono;
    }
    return out;
}

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

RationalRoots rational_roots(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
    RationalRoots out;
    UPoly rest = p;
    int zero_mult = 0;
    while (rest.degree() > 0 && rest.coefficient(0) == 0) {
        rest = rest.divmod(UPoly({Rational(0), Rational(1)})).first;
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
    while (rest.degree() > 0) {
        // integer coefficients: scale by the lcm of denominators
        Integer l = 1;
        for (auto& c : rest.coefficients()) l = lcm(l, Integer(c.get_den()));
        Integer a0 = Integer(rest.coefficient(0) * l), an = Integer(rest.lead() * l);
        std::optional<Rational> found;
        for (auto& num : divisors(a0)) {
            for (auto& den : divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand(num * sign, den);
                    cand.canonicalize();
                    if (rest(cand) == 0) {
                        found = cand;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        int mult = 0;
        UPoly lin({Rational(-*found), Rational(1)});
        while (rest.degree() > 0 && rest(*found) == 0) {
            rest = rest.divmod(lin).first;
            ++mult;
        }
        out.roots.emplace_back(*found, mult);
    }
    out.remaining_degree = std::max(0, rest.degree());
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace liesym
