#include "liesym/lie_algebra.hpp"

#include "liesym/solver.hpp"

namespace liesym {

VectorField commutator(const VectorField& X, const VectorField& Y) {
    if (X.independents() != Y.independents() || X.dependent() != Y.dependent())
        throw std::invalid_argument("commutator of fields over different variables");
    std::vector<Expression> xi;
    for (std::size_t a = 0; a < X.xi().size(); ++a) xi.push_back(X.apply(Y.xi()[a]) - Y.apply(X.xi()[a]));
    return VectorField(X.independents(), X.dependent(), std::move(xi), X.apply(Y.eta()) - Y.apply(X.eta()));
}

namespace {

std::vector<std::vector<Coords>> zero_tensor(std::size_t n) {
    return std::vector<std::vector<Coords>>(n, std::vector<Coords>(n, Coords(n, Expression(0))));
}

bool all_zero(const Coords& v) {
    for (auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

/// Projects each target field onto the span of `basis`; nullopt on the first failure.
struct Projection {
    std::vector<std::optional<Coords>> coords;
    bool independent = true;
};

Projection project(const std::vector<VectorField>& basis, const std::vector<VectorField>& targets) {
    std::vector<VectorField> all = basis;
    all.insert(all.end(), targets.begin(), targets.end());
    Matrix<Expression> rows = coefficient_matrix(all);
    const std::size_t n = basis.size();
    Matrix<Expression> a(rows.cols(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) a.at(j, i) = rows.at(i, j);
    Projection p;
    p.independent = rank(a) == n;
    if (!p.independent) return p;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        std::vector<Expression> b(rows.cols());
        for (std::size_t j = 0; j < rows.cols(); ++j) b[j] = rows.at(n + t, j);
        p.coords.push_back(solve(a, b));
    }
    return p;
}

} // namespace

LieAlgebra structure_constants(const std::vector<VectorField>& basis, std::vector<std::string> names,
                               const std::optional<ParameterBinding>& fallback) {
    const std::size_t n = basis.size();
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    if (names.size() != n) throw std::invalid_argument("one name per basis element expected");

    auto attempt = [&](const std::vector<VectorField>& fields, std::string& failure) -> std::optional<LieAlgebra> {
        std::vector<VectorField> brackets;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                brackets.push_back(commutator(fields[i], fields[j]));
                pairs.emplace_back(i, j);
            }
        Projection p = project(fields, brackets);
        if (!p.independent) {
            failure = "basis is linearly dependent";
            return std::nullopt;
        }
        LieAlgebra L;
        L.names_ = names;
        L.fields_ = basis;
        L.c_ = zero_tensor(n);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            if (!p.coords[k]) {
                failure = "[" + names[i] + ", " + names[j] + "] = " + brackets[k].str() + " is not in the span";
                return std::nullopt;
            }
            L.c_[i][j] = *p.coords[k];
            for (std::size_t l = 0; l < n; ++l) L.c_[j][i][l] = -(*p.coords[k])[l];
        }
        return L;
    };

    std::string failure;
    if (auto L = attempt(basis, failure)) return *L;
    if (!fallback) throw NonClosure(failure);
    std::vector<VectorField> bound;
    for (auto& f : basis) bound.push_back(f.bind(*fallback));
    std::string second;
    auto L = attempt(bound, second);
    if (!L) throw NonClosure(failure + "; at " + fallback->str() + ": " + second);
    L->fields_ = bound;
    L->closure_mode_ = "binding " + fallback->str();
    return *L;
}

LieAlgebra LieAlgebra::from_tensor(std::vector<std::string> names, std::vector<std::vector<Coords>> c) {
    const std::size_t n = names.size();
    if (c.size() != n) throw std::invalid_argument("structure tensor size does not match the basis");
    for (auto& row : c) {
        if (row.size() != n) throw std::invalid_argument("structure tensor size does not match the basis");
        for (auto& v : row)
            if (v.size() != n) throw std::invalid_argument("structure tensor size does not match the basis");
    }
    LieAlgebra L;
    L.names_ = std::move(names);
    L.c_ = std::move(c);
    if (!L.antisymmetric()) throw std::invalid_argument("structure constants are not antisymmetric");
    if (auto f = L.jacobi_failure())
        throw std::invalid_argument("Jacobi identity fails for (" + L.names_[(*f)[0]] + ", " + L.names_[(*f)[1]] +
                                    ", " + L.names_[(*f)[2]] + ")");
    return L;
}

Coords LieAlgebra::unit(std::size_t i) const {
    Coords v(dimension(), Expression(0));
    v.at(i) = Expression(1);
    return v;
}

Coords LieAlgebra::bracket(const Coords& a, const Coords& b) const {
    const std::size_t n = dimension();
    Coords out(n, Expression(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero() || i == j) continue;
            Expression ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c_[i][j][k].is_zero()) out[k] += ab * c_[i][j][k];
        }
    }
    return out;
}

Matrix<Expression> LieAlgebra::ad(const Coords& a) const {
    const std::size_t n = dimension();
    Matrix<Expression> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Coords col = bracket(a, unit(j));
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
    }
    return m;
}

bool LieAlgebra::antisymmetric() const {
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(c_[i][j][k] + c_[j][i][k]).is_zero()) return false;
    return true;
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_failure() const {
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Coords a = bracket(bracket(unit(i), unit(j)), unit(k));
                Coords b = bracket(bracket(unit(j), unit(k)), unit(i));
                Coords c = bracket(bracket(unit(k), unit(i)), unit(j));
                for (std::size_t l = 0; l < n; ++l)
                    if (!(a[l] + b[l] + c[l]).is_zero()) return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

LieAlgebra LieAlgebra::change_basis(const std::vector<Coords>& rows, std::vector<std::string> names) const {
    const std::size_t n = dimension();
    if (rows.size() != n) throw std::invalid_argument("change of basis needs one row per basis element");
    Matrix<Expression> pt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pt.at(j, i) = rows[i].at(j);
    if (rank(pt) != n) throw std::invalid_argument("change of basis is singular");
    if (names.empty())
        for (auto& r : rows) names.push_back(combination(r));
    LieAlgebra L;
    L.names_ = std::move(names);
    L.closure_mode_ = closure_mode_;
    L.c_ = zero_tensor(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            auto x = solve(pt, bracket(rows[i], rows[j]));
            L.c_[i][j] = *x;
        }
    if (!fields_.empty())
        for (auto& r : rows) {
            VectorField f = Expression(0) * fields_[0];
            for (std::size_t j = 0; j < n; ++j)
                if (!r[j].is_zero()) f = f + r[j] * fields_[j];
            L.fields_.push_back(f);
        }
    return L;
}

std::string LieAlgebra::combination(const Coords& v) const {
    Expression e;
    for (std::size_t i = 0; i < v.size(); ++i) e += v[i] * Expression(sym::constant(names_[i]));
    return render(e);
}

namespace subspace {

std::vector<Coords> span(const std::vector<Coords>& vectors, std::size_t dim) {
    Matrix<Expression> m(0, dim);
    for (auto& v : vectors) m.append_row(v);
    auto pivots = rref(m);
    std::vector<Coords> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
    return out;
}

bool contains(const std::vector<Coords>& basis, const Coords& v) {
    if (all_zero(v)) return true;
    std::vector<Coords> all = basis;
    all.push_back(v);
    return span(all, v.size()).size() == basis.size();
}

std::vector<Coords> intersect(const std::vector<Coords>& a, const std::vector<Coords>& b, std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    Matrix<Expression> m(dim, a.size() + b.size());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t p = 0; p < a.size(); ++p) m.at(i, p) = a[p][i];
        for (std::size_t q = 0; q < b.size(); ++q) m.at(i, a.size() + q) = Expression(0) - b[q][i];
    }
    std::vector<Coords> out;
    for (auto& lam : nullspace(m)) {
        Coords v(dim, Expression(0));
        for (std::size_t p = 0; p < a.size(); ++p)
            for (std::size_t i = 0; i < dim; ++i) v[i] += lam[p] * a[p][i];
        out.push_back(std::move(v));
    }
    return span(out, dim);
}

std::vector<Coords> bracket(const LieAlgebra& L, const std::vector<Coords>& a, const std::vector<Coords>& b) {
    std::vector<Coords> out;
    for (auto& x : a)
        for (auto& y : b) out.push_back(L.bracket(x, y));
    return span(out, L.dimension());
}

} // namespace subspace

namespace {

std::vector<Coords> whole(const LieAlgebra& L) {
    std::vector<Coords> out;
    for (std::size_t i = 0; i < L.dimension(); ++i) out.push_back(L.unit(i));
    return out;
}

/// Nullspace of the stacked linear maps, as a subspace basis.
std::vector<Coords> kernel(const Matrix<Expression>& m) {
    auto ns = nullspace(m);
    return subspace::span(ns, m.cols());
}

} // namespace

std::vector<Coords> center(const LieAlgebra& L) {
    const std::size_t n = L.dimension();
    Matrix<Expression> m(0, n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Expression> a = L.ad(L.unit(j));
        for (std::size_t k = 0; k < n; ++k) m.append_row(a.row(k));
    }
    if (n == 0) return {};
    return kernel(m);
}

std::vector<Coords> derived_algebra(const LieAlgebra& L) {
    auto all = whole(L);
    return subspace::bracket(L, all, all);
}

std::vector<std::size_t> derived_series(const LieAlgebra& L) {
    std::vector<std::size_t> out{L.dimension()};
    auto cur = whole(L);
    while (!cur.empty()) {
        auto next = subspace::bracket(L, cur, cur);
        if (next.size() == cur.size()) break;
        out.push_back(next.size());
        cur = std::move(next);
    }
    return out;
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& L) {
    std::vector<std::size_t> out{L.dimension()};
    auto all = whole(L);
    auto cur = all;
    while (!cur.empty()) {
        auto next = subspace::bracket(L, all, cur);
        if (next.size() == cur.size()) break;
        out.push_back(next.size());
        cur = std::move(next);
    }
    return out;
}

Matrix<Expression> killing_form(const LieAlgebra& L) {
    const std::size_t n = L.dimension();
    std::vector<Matrix<Expression>> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(L.unit(i)));
    Matrix<Expression> k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Expression tr;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!ads[i].at(a, b).is_zero() && !ads[j].at(b, a).is_zero()) tr += ads[i].at(a, b) * ads[j].at(b, a);
            k.at(i, j) = tr;
            k.at(j, i) = tr;
        }
    return k;
}

std::optional<std::array<int, 3>> signature(const Matrix<Expression>& symmetric) {
    const std::size_t n = symmetric.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto q = symmetric.at(i, j).as_rational();
            if (!q) return std::nullopt;
            a[i][j] = *q;
        }
    auto swap_both = [&](std::size_t p, std::size_t q) {
        std::swap(a[p], a[q]);
        for (auto& row : a) std::swap(row[p], row[q]);
    };
    std::array<int, 3> sig{0, 0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t l = k + 1;
            while (l < n && a[l][l] == 0) ++l;
            if (l < n) {
                swap_both(k, l);
            } else {
                l = k + 1;
                while (l < n && a[k][l] == 0) ++l;
                if (l == n) {
                    ++sig[2];
                    continue;
                }
                // e_k += e_l, so the new diagonal entry is 2 a_kl
                for (std::size_t j = 0; j < n; ++j) a[k][j] += a[l][j];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][l];
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
        }
        ++sig[a[k][k] > 0 ? 0 : 1];
    }
    return sig;
}

LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<Coords>& basis, std::vector<std::string> names) {
    const std::size_t n = L.dimension(), m = basis.size();
    if (names.empty())
        for (auto& b : basis) names.push_back(L.combination(b));
    Matrix<Expression> a(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) a.at(i, p) = basis[p][i];
    if (rank(a) != m) throw std::invalid_argument("subalgebra basis is linearly dependent");
    std::vector<std::vector<Coords>> c(m, std::vector<Coords>(m, Coords(m, Expression(0))));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto x = solve(a, L.bracket(basis[i], basis[j]));
            if (!x) throw NonClosure("[" + names[i] + ", " + names[j] + "] leaves the subspace");
            c[i][j] = *x;
            for (std::size_t k = 0; k < m; ++k) c[j][i][k] = Expression(0) - (*x)[k];
        }
    return LieAlgebra::from_tensor(std::move(names), std::move(c));
}

} // namespace liesym
