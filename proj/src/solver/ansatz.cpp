#include "liesym/solver.hpp"

namespace liesym {

namespace {

/// Monomials of total degree <= d in `vars`, graded, earlier variables first.
std::vector<std::vector<int>> monomials(std::size_t nvars, int d) {
    std::vector<std::vector<int>> out;
    for (int total = 0; total <= d; ++total) {
        std::vector<int> e(nvars, 0);
        // enumerate compositions of `total` into nvars parts, lexicographically descending
        auto rec = [&](auto&& self, std::size_t i, int left) -> void {
            if (i + 1 == nvars) {
                e[i] = left;
                out.push_back(e);
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[i] = k;
                self(self, i + 1, left - k);
            }
        };
        if (nvars == 0) {
            if (total == 0) out.push_back(e);
            continue;
        }
        rec(rec, 0, total);
    }
    return out;
}

std::string suffix(const std::vector<Symbol>& vars, const std::vector<int>& e) {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (int k = 0; k < e[i]; ++k) s += vars[i].text();
    return s.empty() ? "0" : s;
}

Expression monomial_expr(const std::vector<Symbol>& vars, const std::vector<int>& e) {
    Expression m(1);
    for (std::size_t i = 0; i < vars.size(); ++i) m *= pow(Expression(vars[i]), e[i]);
    return m;
}

} // namespace

AnsatzField build_ansatz(const EvolutionPDE& pde, const Ansatz& ansatz) {
    const std::vector<Symbol> spatial = pde.spatial();
    std::vector<Symbol> unknowns;
    auto unknown = [&](std::string name) {
        Symbol f = sym::function(std::move(name));
        unknowns.push_back(f);
        return Expression(f);
    };
    std::vector<Expression> xi{unknown("a")};
    for (auto& v : spatial) {
        Expression c;
        for (auto& e : monomials(spatial.size(), ansatz.xi_degree))
            c += unknown("b_" + v.text() + suffix(spatial, e)) * monomial_expr(spatial, e);
        xi.push_back(c);
    }
    Expression f;
    for (auto& e : monomials(spatial.size(), ansatz.eta_degree)) {
        std::string s = suffix(spatial, e);
        f += unknown(s == "0" ? "f0" : "f_" + s) * monomial_expr(spatial, e);
    }
    return {VectorField(pde.independents(), pde.dependent(), std::move(xi), f * Expression(pde.dependent())),
            std::move(unknowns)};
}

} // namespace liesym
