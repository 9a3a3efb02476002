#include "poly.hpp"

#include <functional>
#include <string>

#include <algorithm>
#include <stdexcept>

namespace liesym::detail {

std::strong_ordering compare_mono(const PMono& a, const PMono& b) {
    if (auto c = mono_degree(a) <=> mono_degree(b); c != 0) return c;
    // lexicographic: a monomial with a larger power of an earlier symbol is larger
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first ? std::strong_ordering::greater
                                                                      : std::strong_ordering::less;
        if (a[i].second != b[i].second) return a[i].second <=> b[i].second;
    }
    return a.size() <=> b.size();
}

int mono_degree(const PMono& m) {
    int d = 0;
    for (auto& [s, e] : m) d += e;
    return d;
}

PMono mono_mul(const PMono& a, const PMono& b) {
    PMono out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace_back(PMono{}, c);
}

Poly Poly::monomial(PMono m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
}

Poly Poly::variable(const Symbol& s, int e) {
    if (e == 0) return Poly(Rational(1));
    return monomial(PMono{{s, e}}, Rational(1));
}

Poly Poly::from_map(std::map<PMono, Rational, MonoLess>&& m) {
    Poly p;
    p.terms_.reserve(m.size());
    for (auto& [mono, c] : m)
        if (c != 0) p.terms_.emplace_back(mono, c);
    return p;
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].first.empty() && terms_[0].second == 1; }

Rational Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_[0].second;
}

bool Poly::contains(const Symbol& s) const { return degree(s) > 0; }

int Poly::degree(const Symbol& s) const {
    int d = 0;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m)
            if (v == s) d = std::max(d, e);
    return d;
}

std::optional<Symbol> Poly::main_variable() const {
    std::optional<Symbol> best;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m)
            if (!best || *best < v) best = v;
    return best;
}

std::map<int, Poly> Poly::coefficients(const Symbol& v) const {
    std::map<int, std::map<PMono, Rational, MonoLess>> acc;
    for (auto& [m, c] : terms_) {
        int k = 0;
        PMono rest;
        for (auto& [s, e] : m) {
            if (s == v)
                k = e;
            else
                rest.emplace_back(s, e);
        }
        acc[k][rest] += c;
    }
    std::map<int, Poly> out;
    for (auto& [k, m] : acc) {
        Poly p = from_map(std::move(m));
        if (!p.is_zero()) out.emplace(k, std::move(p));
    }
    return out;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size()) {
            out.terms_.push_back(a.terms_[i++]);
            continue;
        }
        if (i == a.terms_.size()) {
            out.terms_.push_back(b.terms_[j++]);
            continue;
        }
        auto c = compare_mono(a.terms_[i].first, b.terms_[j].first);
        if (c < 0) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (c > 0) {
            out.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].second + b.terms_[j].second;
            if (s != 0) out.terms_.emplace_back(a.terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<PMono, Rational, MonoLess> acc;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) acc[mono_mul(ma, mb)] += ca * cb;
    return Poly::from_map(std::move(acc));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly p = *this;
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare_mono(a.terms_[i].first, b.terms_[i].first); c != 0) return c;
        int q = cmp(a.terms_[i].second, b.terms_[i].second);
        if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
}

const Poly& discriminant() {
    static const Poly d = Poly::variable(sym::R(), 2) - Poly::variable(sym::S()).scaled(4);
    return d;
}

Poly reduce_surd(const Poly& p) {
    const Symbol w = sym::omega();
    if (p.degree(w) < 2) return p;
    Poly out;
    for (auto& [m, c] : p.terms()) {
        int k = 0;
        PMono rest;
        for (auto& [s, e] : m) {
            if (s == w)
                k = e;
            else
                rest.emplace_back(s, e);
        }
        if (k < 2) {
            out = out + Poly::monomial(m, c);
            continue;
        }
        Poly term = Poly::monomial(rest, c);
        if (k % 2) term = term * Poly::variable(w);
        for (int i = 0; i < k / 2; ++i) term = term * discriminant();
        out = out + term;
    }
    return out;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading_coefficient());
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Poly{};
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    const Symbol v = *b.main_variable();
    const auto bc = b.coefficients(v);
    const int db = bc.rbegin()->first;
    const Poly& lb = bc.rbegin()->second;
    Poly q, rem = a;
    while (!rem.is_zero()) {
        auto rc = rem.coefficients(v);
        int dr = rc.rbegin()->first;
        if (dr < db) return std::nullopt;
        auto qc = divide_exact(rc.rbegin()->second, lb);
        if (!qc) return std::nullopt;
        Poly t = *qc * Poly::variable(v, dr - db);
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, const Symbol& v) {
    const auto bc = b.coefficients(v);
    const int db = bc.rbegin()->first;
    const Poly& lb = bc.rbegin()->second;
    Poly rem = a;
    int e = a.degree(v) - db + 1;
    while (!rem.is_zero()) {
        int dr = rem.degree(v);
        if (dr < db) break;
        Poly lr = rem.coefficients(v).rbegin()->second;
        rem = lb * rem - lr * Poly::variable(v, dr - db) * b;
        --e;
    }
    for (; e > 0; --e) rem = lb * rem;
    return rem;
}

namespace {

Poly content(const Poly& p, const Symbol& v) {
    Poly g;
    for (auto& [k, c] : p.coefficients(v)) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly primitive_part(const Poly& p, const Symbol& v) {
    if (p.is_zero()) return p;
    return *divide_exact(p, content(p, v));
}

/// Fixed evaluation point for every symbol other than the main variable.
Rational probe_value(const Symbol& s) {
    std::size_t h = std::hash<std::string>{}(s.name()) ^ (static_cast<std::size_t>(s.kind()) << 7);
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    return make_rational(primes[h % 14], primes[(h / 14) % 14]);
}

/// Dense univariate image in v, lowest degree first; nullopt when the
/// leading coefficient vanishes at the probe point.
std::optional<std::vector<Rational>> probe_image(const Poly& p, const Symbol& v) {
    std::vector<Rational> out(static_cast<std::size_t>(p.degree(v)) + 1, Rational(0));
    for (auto& [mono, c] : p.terms()) {
        Rational val = c;
        int e = 0;
        for (auto& [sym, k] : mono) {
            if (sym == v) {
                e = k;
                continue;
            }
            Rational x = probe_value(sym);
            for (int i = 0; i < k; ++i) val *= x;
        }
        out[static_cast<std::size_t>(e)] += val;
    }
    if (out.back() == 0) return std::nullopt;
    return out;
}

std::size_t univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Rational f = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    Symbol v = *a.main_variable();
    if (Symbol vb = *b.main_variable(); v < vb) v = vb;
    if (!a.contains(v)) return gcd(a, content(b, v));
    if (!b.contains(v)) return gcd(content(a, v), b);

    Poly ca = content(a, v), cb = content(b, v);
    Poly c = gcd(ca, cb);
    Poly p = *divide_exact(a, ca), q = *divide_exact(b, cb);
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    // the image of the gcd divides the gcd of the images when leading
    // coefficients survive, so a constant image gcd settles the v-part
    auto ip = probe_image(p, v), iq = probe_image(q, v);
    if (ip && iq) {
        std::size_t d = univariate_gcd_degree(*ip, *iq);
        if (d == 0) return monic(c);
        if (d == static_cast<std::size_t>(q.degree(v)))
            if (divide_exact(p, q)) return monic(c * q);
    }
    while (!q.is_zero()) {
        Poly rem = pseudo_remainder(p, q, v);
        p = std::move(q);
        q = rem.is_zero() ? rem : primitive_part(rem, v);
    }
    Poly g = primitive_part(p, v);
    return monic(c * g);
}

} // namespace liesym::detail
