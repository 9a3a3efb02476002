#include "liesym/rational.hpp"

#include <stdexcept>

namespace liesym {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && (d.front() == '-' || d.front() == '+')) d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (num.front() == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool exact_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

} // namespace liesym
