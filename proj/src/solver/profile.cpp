#include "liesym/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liesym {

namespace {

bool only_t(const Expression& e) {
    for (const Symbol& s : symbols(e))
        if (!s.is_coefficient() && s != sym::t()) return false;
    return true;
}

/// Columns = expressions, rows = structural monomials (which include the t-exponentials).
Matrix<Rational> by_monomial(const std::vector<Expression>& es) {
    std::map<Expression, std::size_t> rows;
    std::vector<std::vector<std::pair<Expression, Expression>>> terms;
    for (auto& e : es) {
        terms.push_back(structural_terms(e));
        for (auto& [m, c] : terms.back()) rows.emplace(m, 0);
    }
    std::size_t k = 0;
    for (auto& [m, idx] : rows) idx = k++;
    Matrix<Rational> out(rows.size(), es.size());
    for (std::size_t j = 0; j < es.size(); ++j)
        for (auto& [m, c] : terms[j]) {
            auto q = c.as_rational();
            if (!q) throw NonRationalValue("profile needs a basis at a rational binding: " + render(c));
            out.at(rows.at(m), j) += *q;
        }
    return out;
}

Expression combine(const std::vector<Expression>& es, const std::vector<Rational>& c) {
    Expression out;
    for (std::size_t i = 0; i < es.size(); ++i)
        if (c[i] != 0) out += Expression(c[i]) * es[i];
    return out;
}

/// Coefficient vectors spanning {c : sum c_i e_i = 0 for every list in `lists`}.
std::vector<std::vector<Rational>> annihilators(const std::vector<std::vector<Expression>>& lists, std::size_t n) {
    Matrix<Rational> stacked(0, n);
    for (auto& l : lists) {
        Matrix<Rational> m = by_monomial(l);
        for (std::size_t i = 0; i < m.rows(); ++i) stacked.append_row(m.row(i));
    }
    if (stacked.rows() == 0) {
        std::vector<std::vector<Rational>> id;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> v(n, Rational(0));
            v[i] = 1;
            id.push_back(v);
        }
        return id;
    }
    return nullspace(stacked);
}

int span_dimension(const std::vector<Expression>& es) {
    if (es.empty()) return 0;
    return static_cast<int>(rank(by_monomial(es)));
}

} // namespace

bool SymmetryProfile::all_shapes_hold() const {
    return std::all_of(generators.begin(), generators.end(), [](const GeneratorProfile& g) { return g.shape_holds(); });
}

SymmetryProfile profile_basis(const SymmetryBasis& basis) {
    SymmetryProfile p;
    const Symbol t = sym::t();
    std::vector<Expression> as, bs, fs;
    for (auto& g : basis.generators) {
        if (g.independents().size() != 2 || g.independents()[0] != t)
            throw std::invalid_argument("profile_basis needs a (1+1) equation in t and one spatial variable");
        const Symbol r = g.independents()[1];
        GeneratorProfile gp;
        const Expression z(g.dependent());
        gp.a = g.xi(t);
        gp.a_depends_on_t_only = only_t(gp.a);
        Expression da = only_t(gp.a) ? differentiate(gp.a, t) : Expression();
        gp.b = g.xi(r) - Expression(make_rational(1, 2)) * da * Expression(r);
        gp.b_free_of_r = !depends_on(gp.b, r) && !depends_on(gp.b, g.dependent());
        Expression ratio = partial(g.eta(), g.dependent());
        gp.eta_linear_in_z = !depends_on(ratio, g.dependent()) && ratio * z == g.eta();
        gp.f = substitute(ratio, r, Expression(0));
        gp.F = ratio - gp.f;
        if (gp.a.is_zero())
            ++p.without_time_part;
        else
            ++p.with_time_part;
        as.push_back(gp.a);
        bs.push_back(gp.b);
        fs.push_back(gp.f);
        p.generators.push_back(std::move(gp));
    }
    const std::size_t n = as.size();
    p.a_order = span_dimension(as);
    std::vector<Expression> b_restricted, f_restricted;
    for (auto& c : annihilators({as}, n)) b_restricted.push_back(combine(bs, c));
    p.b_order = span_dimension(b_restricted);
    for (auto& c : annihilators({as, bs}, n)) f_restricted.push_back(combine(fs, c));
    p.f_order = span_dimension(f_restricted);
    return p;
}

} // namespace liesym
