#include "normal.hpp"

#include "liesym/expression.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym::detail {

namespace {

std::strong_ordering compare_ptr(const NormalPtr& a, const NormalPtr& b) {
    if (!a || !b) return (a != nullptr) <=> (b != nullptr);
    return compare(*a, *b);
}

template <class T, class Less>
std::vector<std::pair<T, int>> merge_powers(const std::vector<std::pair<T, int>>& a,
                                            const std::vector<std::pair<T, int>>& b, Less less) {
    std::vector<std::pair<T, int>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].first, a[i].first)) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

bool ptr_less(const NormalPtr& a, const NormalPtr& b) { return compare(*a, *b) < 0; }
bool sym_less(const Symbol& a, const Symbol& b) { return a < b; }

SKey key_mul(const SKey& a, const SKey& b) {
    SKey k;
    k.powers = merge_powers(a.powers, b.powers, sym_less);
    k.opaque = merge_powers(a.opaque, b.opaque, ptr_less);
    if (a.exp_arg && b.exp_arg) {
        Normal s = n_add(*a.exp_arg, *b.exp_arg);
        if (!s.is_zero()) k.exp_arg = std::make_shared<const Normal>(std::move(s));
    } else {
        k.exp_arg = a.exp_arg ? a.exp_arg : b.exp_arg;
    }
    return k;
}

SKey key_inverse(const SKey& a) {
    SKey k = a;
    for (auto& [s, e] : k.powers) e = -e;
    for (auto& [p, e] : k.opaque) e = -e;
    if (k.exp_arg) k.exp_arg = std::make_shared<const Normal>(n_neg(*k.exp_arg));
    return k;
}

Normal single(const SKey& k, Poly c, Poly den = Poly(Rational(1))) {
    NumMap m;
    m.emplace(k, std::move(c));
    return make_normal(std::move(m), std::move(den));
}

Normal from_key(const SKey& k) { return single(k, Poly(Rational(1))); }

} // namespace

namespace {

bool is_jet_part(const Symbol& s) { return s.is_dependent() || s.is_jet(); }

/// Lexicographic comparison of the powers whose symbol satisfies `keep`.
template <class Pred>
std::strong_ordering compare_powers(const SKey& a, const SKey& b, Pred keep) {
    std::size_t i = 0, j = 0;
    for (;;) {
        while (i < a.powers.size() && !keep(a.powers[i].first)) ++i;
        while (j < b.powers.size() && !keep(b.powers[j].first)) ++j;
        bool ea = i == a.powers.size(), eb = j == b.powers.size();
        if (ea || eb) return eb <=> ea;
        if (auto c = a.powers[i].first <=> b.powers[j].first; c != 0) return c;
        if (auto c = a.powers[i].second <=> b.powers[j].second; c != 0) return c;
        ++i;
        ++j;
    }
}

} // namespace

// Jet factors lead the order so that equations print by derivative.
std::strong_ordering compare(const SKey& a, const SKey& b) {
    if (auto c = compare_ptr(a.exp_arg, b.exp_arg); c != 0) return c;
    if (auto c = compare_powers(a, b, is_jet_part); c != 0) return c;
    if (auto c = compare_powers(a, b, [](const Symbol& s) { return !is_jet_part(s); }); c != 0) return c;
    std::size_t n = std::min(a.opaque.size(), b.opaque.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(*a.opaque[i].first, *b.opaque[i].first); c != 0) return c;
        if (auto c = a.opaque[i].second <=> b.opaque[i].second; c != 0) return c;
    }
    return a.opaque.size() <=> b.opaque.size();
}

std::strong_ordering compare(const Normal& a, const Normal& b) {
    std::size_t n = std::min(a.num.size(), b.num.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(a.num[i].first, b.num[i].first); c != 0) return c;
        if (auto c = a.num[i].second <=> b.num[i].second; c != 0) return c;
    }
    if (auto c = a.num.size() <=> b.num.size(); c != 0) return c;
    return a.den <=> b.den;
}

std::optional<Rational> Normal::rational() const {
    if (num.empty()) return Rational(0);
    if (num.size() != 1 || !num[0].first.empty() || !num[0].second.is_constant() || !den.is_constant())
        return std::nullopt;
    return num[0].second.constant_value() / den.constant_value();
}

bool Normal::has_opaque() const {
    for (auto& [k, c] : num) {
        if (!k.opaque.empty()) return true;
        if (k.exp_arg && k.exp_arg->has_opaque()) return true;
    }
    return false;
}

Normal make_normal(NumMap&& num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("division by an expression that simplifies to zero");
    Normal out;
    for (auto& [k, c] : num)
        if (!c.is_zero()) out.num.emplace_back(k, std::move(c));
    if (out.num.empty()) return out;

    if (!den.is_constant()) {
        Poly g = den;
        for (auto& [k, c] : out.num) {
            g = gcd(g, c);
            if (g.is_one()) break;
        }
        if (!g.is_one()) {
            den = *divide_exact(den, g);
            for (auto& [k, c] : out.num) c = *divide_exact(c, g);
        }
    }
    Rational lc = den.leading_coefficient();
    if (lc != 1) {
        Rational inv = 1 / lc;
        den = den.scaled(inv);
        for (auto& [k, c] : out.num) c = c.scaled(inv);
    }
    out.den = std::move(den);
    return out;
}

Normal n_const(const Rational& c) {
    NumMap m;
    m.emplace(SKey{}, Poly(c));
    return make_normal(std::move(m), Poly(Rational(1)));
}

Normal n_symbol(const Symbol& s) {
    if (s.is_coefficient()) return single(SKey{}, Poly::variable(s));
    SKey k;
    k.powers.emplace_back(s, 1);
    return from_key(k);
}

Normal n_add(const Normal& a, const Normal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    NumMap m;
    Poly den;
    if (a.den == b.den) {
        for (auto& [k, c] : a.num) m[k] = c;
        for (auto& [k, c] : b.num) m[k] = m[k] + c;
        den = a.den;
    } else {
        Poly g = gcd(a.den, b.den);
        Poly ma = *divide_exact(b.den, g), mb = *divide_exact(a.den, g);
        for (auto& [k, c] : a.num) m[k] = c * ma;
        for (auto& [k, c] : b.num) m[k] = m[k] + c * mb;
        den = a.den * ma;
    }
    return make_normal(std::move(m), std::move(den));
}

Normal n_neg(const Normal& a) {
    Normal out = a;
    for (auto& [k, c] : out.num) c = -c;
    return out;
}

Normal n_mul(const Normal& a, const Normal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    NumMap m;
    for (auto& [ka, ca] : a.num)
        for (auto& [kb, cb] : b.num) {
            SKey k = key_mul(ka, kb);
            Poly c = mul_reduced(ca, cb);
            auto it = m.find(k);
            if (it == m.end())
                m.emplace(std::move(k), std::move(c));
            else
                it->second = it->second + c;
        }
    return make_normal(std::move(m), a.den * b.den);
}

Normal n_inverse(const Normal& a) {
    if (a.is_zero()) throw DivisionByZero("division by an expression that simplifies to zero");
    const Symbol w = sym::omega();
    if (a.num.size() == 1) {
        const auto& [key, c] = a.num[0];
        SKey inv = key_inverse(key);
        std::vector<std::pair<NormalPtr, int>> positive;
        std::erase_if(inv.opaque, [&](const auto& pe) {
            if (pe.second > 0) {
                positive.push_back(pe);
                return true;
            }
            return false;
        });
        Normal out;
        if (c.contains(w)) {
            auto parts = c.coefficients(w);
            Poly c0 = parts.count(0) ? parts[0] : Poly{};
            Poly c1 = parts.count(1) ? parts[1] : Poly{};
            Poly conj = c0 - c1 * Poly::variable(w);
            Poly norm = c0 * c0 - c1 * c1 * discriminant();
            out = single(inv, a.den * conj, norm);
        } else {
            out = single(inv, a.den, c);
        }
        for (auto& [p, e] : positive) out = n_mul(out, n_pow(*p, e));
        return out;
    }

    // multi-term: pull out the common structural monomial and a scalar so the
    // remaining sum is an opaque factor with leading coefficient 1
    SKey common;
    {
        std::map<Symbol, int> lo;
        std::map<Symbol, int> seen;
        for (auto& [k, c] : a.num)
            for (auto& [s, e] : k.powers) {
                ++seen[s];
                lo[s] = lo.count(s) ? std::min(lo[s], e) : e;
            }
        for (auto& [s, e] : lo) {
            int v = seen[s] == static_cast<int>(a.num.size()) ? e : std::min(e, 0);
            if (v != 0) common.powers.emplace_back(s, v);
        }
        bool same_exp = true;
        for (auto& [k, c] : a.num)
            if (compare_ptr(k.exp_arg, a.num[0].first.exp_arg) != 0) same_exp = false;
        if (same_exp) common.exp_arg = a.num[0].first.exp_arg;
    }
    Normal lead = single(SKey{}, a.num[0].second, a.den);
    Normal rest = n_mul(a, n_mul(from_key(key_inverse(common)), n_inverse(lead)));
    SKey op;
    op.opaque.emplace_back(std::make_shared<const Normal>(std::move(rest)), -1);
    return n_mul(from_key(op), n_mul(from_key(key_inverse(common)), n_inverse(lead)));
}

Normal n_pow(const Normal& a, long k) {
    if (k == 0) return n_const(1);
    if (k < 0) return n_pow(n_inverse(a), -k);
    Normal result = n_const(1), base = a;
    while (k > 0) {
        if (k & 1) result = n_mul(result, base);
        k >>= 1;
        if (k) base = n_mul(base, base);
    }
    return result;
}

Normal n_exp(const Normal& a) {
    if (a.is_zero()) return n_const(1);
    SKey k;
    k.exp_arg = std::make_shared<const Normal>(a);
    return from_key(k);
}

Normal n_partial(const Normal& a, const Symbol& s) {
    if (s.is_coefficient()) throw std::invalid_argument("cannot differentiate with respect to coefficient symbol '" + s.text() + "'");
    Normal total;
    for (auto& [k, c] : a.num) {
        Normal dk;
        for (std::size_t i = 0; i < k.powers.size(); ++i) {
            if (k.powers[i].first != s) continue;
            SKey k2 = k;
            int e = k2.powers[i].second;
            if (e == 1)
                k2.powers.erase(k2.powers.begin() + static_cast<long>(i));
            else
                k2.powers[i].second = e - 1;
            dk = n_add(dk, single(k2, Poly(Rational(e))));
        }
        for (std::size_t i = 0; i < k.opaque.size(); ++i) {
            Normal dp = n_partial(*k.opaque[i].first, s);
            if (dp.is_zero()) continue;
            SKey k2 = k;
            int e = k2.opaque[i].second;
            if (e == 1)
                k2.opaque.erase(k2.opaque.begin() + static_cast<long>(i));
            else
                k2.opaque[i].second = e - 1;
            dk = n_add(dk, n_mul(single(k2, Poly(Rational(e))), dp));
        }
        if (k.exp_arg) {
            Normal da = n_partial(*k.exp_arg, s);
            if (!da.is_zero()) dk = n_add(dk, n_mul(from_key(k), da));
        }
        if (!dk.is_zero()) total = n_add(total, n_mul(dk, single(SKey{}, c, a.den)));
    }
    return total;
}

void collect_symbols(const Normal& a, std::set<Symbol>& out) {
    for (auto& [k, c] : a.num) {
        for (auto& [m, q] : c.terms())
            for (auto& [s, e] : m) out.insert(s);
        for (auto& [s, e] : k.powers) out.insert(s);
        for (auto& [p, e] : k.opaque) collect_symbols(*p, out);
        if (k.exp_arg) collect_symbols(*k.exp_arg, out);
    }
    for (auto& [m, q] : a.den.terms())
        for (auto& [s, e] : m) out.insert(s);
}

} // namespace liesym::detail
