// Recursive-descent parser for the expression grammar:
//
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := "-" unary | factor
//   factor := base ("^" signed-integer)?
//   base   := integer | identifier | "(" expr ")" | "exp" "(" expr ")" | "sqrt" "(" expr ")"

#include "liesym/expression.hpp"

#include <algorithm>
#include <cctype>

namespace liesym {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        int l = line, cc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && (src[j] == '.' || src[j] == 'e' || src[j] == 'E'))
                throw ParseError("floating-point literals are not supported; write an exact rational such as 1/2", l, cc);
            out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
        }
        out.push_back({k, std::string(1, c), l, cc});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const char* kReserved =
    "t, x, y, r, u, z, R, S, V, W, omega, exp, sqrt, and jets such as u_t, u_x, u_y, u_xx, u_xy, u_yy, "
    "u_tx, u_ty, u_tt, z_r, z_rr";

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : toks_(lex(text)), opts_(opts) {}

    Expression run() {
        Expression e = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions& opts_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
    [[noreturn]] static void fail_at(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.column);
    }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    Expression expr() {
        std::vector<Expression> terms{term()};
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = take().kind == Tok::Minus;
            Expression t = term();
            terms.push_back(minus ? negate(t) : t);
        }
        return terms.size() == 1 ? terms[0] : Expression::raw_sum(std::move(terms));
    }

    static Expression negate(Expression e) {
        return Expression::raw_product({Expression::raw_number(-1), std::move(e)});
    }

    Expression term() {
        std::vector<Expression> factors{unary()};
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            bool divide = take().kind == Tok::Slash;
            Expression f = unary();
            factors.push_back(divide ? Expression::raw_power(f, -1) : f);
        }
        return factors.size() == 1 ? factors[0] : Expression::raw_product(std::move(factors));
    }

    Expression unary() {
        if (peek().kind == Tok::Minus) {
            ++pos_;
            return negate(unary());
        }
        if (peek().kind == Tok::Plus) {
            ++pos_;
            return unary();
        }
        return factor();
    }

    Expression factor() {
        Expression b = base();
        if (peek().kind != Tok::Caret) return b;
        ++pos_;
        bool paren = false;
        if (peek().kind == Tok::LParen) {
            paren = true;
            ++pos_;
        }
        long sign = 1;
        if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) sign = take().kind == Tok::Minus ? -1 : 1;
        if (peek().kind != Tok::Number) fail("exponent must be a signed integer");
        const Token& n = take();
        if (n.text.size() > 6) fail_at("exponent too large", n);
        long k = sign * std::stol(n.text);
        if (paren) expect(Tok::RParen, "')'");
        return Expression::raw_power(b, k);
    }

    Expression base() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number:
            ++pos_;
            return Expression::raw_number(Rational(Integer(t.text)));
        case Tok::LParen: {
            ++pos_;
            Expression e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Ident:
            return identifier();
        default:
            fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        }
    }

    Expression identifier() {
        const Token t = take();
        const std::string& s = t.text;
        if (s == "exp" || s == "sqrt") {
            expect(Tok::LParen, "'(' after function name");
            Expression arg = expr();
            expect(Tok::RParen, "')'");
            if (s == "exp") return Expression::raw_exp(arg);
            Expression disc = pow(Expression(sym::R()), 2) - 4 * Expression(sym::S());
            if (simplify(arg) != disc)
                fail_at("sqrt is only supported for the discriminant sqrt(R^2 - 4*S)", t);
            return Expression::raw_atom(sym::omega());
        }
        if (s == "t" || s == "x" || s == "y" || s == "r") return Expression::raw_atom(Symbol(SymbolKind::Independent, s));
        if (s == "u" || s == "z") return Expression::raw_atom(Symbol(SymbolKind::Dependent, s));
        if (s == "R" || s == "S" || s == "V" || s == "W") return Expression::raw_atom(Symbol(SymbolKind::Parameter, s));
        if (s == "omega") return Expression::raw_atom(sym::omega());
        if (s.size() > 2 && (s[0] == 'u' || s[0] == 'z') && s[1] == '_') return jet(t);
        if (std::find(opts_.constants.begin(), opts_.constants.end(), s) != opts_.constants.end())
            return Expression::raw_atom(sym::constant(s));
        fail_at("unknown identifier '" + s + "'; reserved names are " + kReserved, t);
    }

    Expression jet(const Token& t) {
        static constexpr std::string_view letters = "txyr";
        MultiIndex idx{};
        int last = -1;
        for (char c : std::string_view(t.text).substr(2)) {
            auto p = letters.find(c);
            if (p == std::string_view::npos) fail_at("invalid jet subscript in '" + t.text + "'", t);
            if (static_cast<int>(p) < last)
                fail_at("jet subscripts must be written in the order t, x, y, r: '" + t.text + "'", t);
            last = static_cast<int>(p);
            ++idx[p];
        }
        int order = idx[0] + idx[1] + idx[2] + idx[3];
        if (order > kMaxJetOrder) fail_at("jet order exceeds " + std::to_string(kMaxJetOrder) + " in '" + t.text + "'", t);
        return Expression::raw_atom(sym::jet(Symbol(SymbolKind::Dependent, t.text.substr(0, 1)), idx));
    }
};

} // namespace

Expression parse_raw(std::string_view text, const ParseOptions& options) { return Parser(text, options).run(); }

Expression parse(std::string_view text, const ParseOptions& options) { return simplify(parse_raw(text, options)); }

} // namespace liesym
