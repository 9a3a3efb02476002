#include "liesym/lie_algebra.hpp"

namespace liesym {

namespace {

constexpr std::size_t kMaxDimension = 6;
const char* kOplusS = " ⊕ₛ ";
const char* kOplus = " ⊕ ";

std::vector<Coords> whole(const LieAlgebra& L) {
    std::vector<Coords> out;
    for (std::size_t i = 0; i < L.dimension(); ++i) out.push_back(L.unit(i));
    return out;
}

bool same_span(const std::vector<Coords>& a, const std::vector<Coords>& b) {
    if (a.size() != b.size()) return false;
    for (auto& v : b)
        if (!subspace::contains(a, v)) return false;
    return true;
}

bool subset(const std::vector<Coords>& a, const std::vector<Coords>& b) {
    for (auto& v : a)
        if (!subspace::contains(b, v)) return false;
    return true;
}

/// {x : f(x, w) = 0 for all w in W} for the bilinear form f.
std::vector<Coords> orthogonal(const Matrix<Expression>& f, const std::vector<Coords>& W) {
    const std::size_t n = f.rows();
    if (W.empty()) {
        std::vector<Coords> out(n, Coords(n, Expression(0)));
        for (std::size_t i = 0; i < n; ++i) out[i][i] = Expression(1);
        return out;
    }
    Matrix<Expression> m(0, n);
    for (auto& w : W) {
        Coords row(n, Expression(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!f.at(i, j).is_zero() && !w[j].is_zero()) row[i] += f.at(i, j) * w[j];
        m.append_row(row);
    }
    return subspace::span(nullspace(m), n);
}

bool is_heisenberg(std::size_t n, const std::vector<Coords>& Z, const std::vector<Coords>& D) {
    return n >= 3 && n % 2 == 1 && Z.size() == 1 && D.size() == 1 && same_span(Z, D);
}

std::string heisenberg_label(std::size_t n) {
    if (n == 3) return "A3,1";
    if (n == 5) return "A5,4";
    return {};
}

/// Names the algebras that need no decomposition; empty when none applies.
void name_indecomposable(const LieAlgebra& L, Verdict& v) {
    const std::size_t n = v.dimension;
    if (n == 0) return;
    if (v.derived_dim == 0) {
        v.name = n == 1 ? "A1" : std::to_string(n) + "A1";
        v.description = "abelian";
        v.mubarakzyanov_label = v.name;
        return;
    }
    if (n == 2) {
        v.name = "A2";
        v.description = "non-abelian, [e1, e2] = e1";
        v.mubarakzyanov_label = "A2";
        return;
    }
    if (is_heisenberg(n, v.center, v.derived)) {
        v.name = "W" + std::to_string(n);
        v.description = "Heisenberg-Weyl";
        v.mubarakzyanov_label = heisenberg_label(n);
        if (n == 3)
            v.note = "one-dimensional center equal to the derived algebra; labelled A3,1 in the standard "
                     "Mubarakzyanov tables and A3,3 in some applied sources";
        return;
    }
    if (n == 3 && v.derived_dim == 3) {
        v.killing_signature = signature(killing_form(L));
        if (!v.killing_signature) {
            v.note = "simple of dimension 3, but the Killing form is not rational so the real form is undetermined";
            return;
        }
        auto s = *v.killing_signature;
        if (s == std::array<int, 3>{2, 1, 0}) {
            v.name = "sl(2,ℝ)";
            v.description = "simple, Killing signature (2,1)";
            v.mubarakzyanov_label = "A3,8";
        } else if (s == std::array<int, 3>{0, 3, 0}) {
            v.name = "so(3)";
            v.description = "simple, Killing form negative definite";
            v.mubarakzyanov_label = "A3,9";
        }
    }
}

/// Corrects complement vectors by elements of the nilpotent ideal so they
/// close as a subalgebra, working down the lower central series of the ideal.
std::optional<std::vector<Coords>> close_complement(const LieAlgebra& L, std::vector<Coords> S,
                                                    const std::vector<std::vector<Coords>>& series) {
    const std::size_t n = L.dimension(), m = S.size();
    // quotient structure constants, read off in the basis S followed by N
    Matrix<Expression> basis(n, n);
    const auto& N = series.front();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < m; ++p) basis.at(i, p) = S[p][i];
        for (std::size_t q = 0; q < N.size(); ++q) basis.at(i, m + q) = N[q][i];
    }
    std::vector<std::vector<Coords>> cbar(m, std::vector<Coords>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto x = solve(basis, L.bracket(S[i], S[j]));
            cbar[i][j].assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(m));
        }
    auto error = [&](std::size_t i, std::size_t j) {
        Coords e = L.bracket(S[i], S[j]);
        for (std::size_t k = 0; k < m; ++k)
            if (!cbar[i][j][k].is_zero())
                for (std::size_t l = 0; l < n; ++l) e[l] -= cbar[i][j][k] * S[k][l];
        return e;
    };
    for (std::size_t round = 0; round <= series.size(); ++round) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::vector<Coords> errs;
        bool done = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                pairs.emplace_back(i, j);
                errs.push_back(error(i, j));
                for (auto& x : errs.back())
                    if (!x.is_zero()) done = false;
            }
        if (done) return S;
        // deepest term of the series holding every error
        std::size_t p = 0;
        while (p + 1 < series.size() && subset(errs, series[p + 1])) ++p;
        const auto& Np = series[p];
        const std::vector<Coords> next = p + 1 < series.size() ? series[p + 1] : std::vector<Coords>{};
        // functionals vanishing on the next term
        Matrix<Expression> nm(0, n);
        for (auto& w : next) nm.append_row(w);
        std::vector<Coords> ann;
        if (next.empty())
            for (std::size_t i = 0; i < n; ++i) ann.push_back(L.unit(i));
        else
            ann = nullspace(nm);
        const std::size_t d = Np.size();
        Matrix<Expression> A(0, m * d);
        std::vector<Expression> b;
        auto dot = [&](const Coords& f, const Coords& x) {
            Expression s;
            for (std::size_t l = 0; l < n; ++l)
                if (!f[l].is_zero() && !x[l].is_zero()) s += f[l] * x[l];
            return s;
        };
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            auto [i, j] = pairs[e];
            for (auto& f : ann) {
                std::vector<Expression> row(m * d, Expression(0));
                for (std::size_t a = 0; a < d; ++a) {
                    // [s_i, m_j] + [m_i, s_j] - sum_k cbar_ij^k m_k
                    row[j * d + a] += dot(f, L.bracket(S[i], Np[a]));
                    row[i * d + a] += dot(f, L.bracket(Np[a], S[j]));
                    for (std::size_t k = 0; k < m; ++k)
                        if (!cbar[i][j][k].is_zero()) row[k * d + a] -= cbar[i][j][k] * dot(f, Np[a]);
                }
                A.append_row(row);
                b.push_back(Expression(0) - dot(f, errs[e]));
            }
        }
        auto mu = solve(A, b);
        if (!mu) return std::nullopt;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < d; ++a)
                if (!(*mu)[i * d + a].is_zero())
                    for (std::size_t l = 0; l < n; ++l) S[i][l] += (*mu)[i * d + a] * Np[a][l];
    }
    return std::nullopt;
}

} // namespace

std::string Verdict::summary() const {
    if (!classified()) {
        std::string s = "unclassified (dim " + std::to_string(dimension) + ", center " + std::to_string(center_dim) +
                        ", derived series";
        for (auto d : derived_series) s += " " + std::to_string(d);
        return s + ")";
    }
    return name + " (" + description + ", dim " + std::to_string(dimension) + ")";
}

Verdict classify(const LieAlgebra& L) {
    Verdict v;
    v.dimension = L.dimension();
    if (v.dimension > kMaxDimension) {
        v.note = "dimension above " + std::to_string(kMaxDimension) + " is outside the recognized range";
        v.derived_series = derived_series(L);
        return v;
    }
    v.center = center(L);
    v.derived = derived_algebra(L);
    v.center_dim = v.center.size();
    v.derived_dim = v.derived.size();
    v.derived_series = derived_series(L);
    v.lower_central_series = lower_central_series(L);
    name_indecomposable(L, v);
    if (v.classified() || v.dimension < 3 || !v.note.empty()) return v;

    const std::size_t n = v.dimension;
    const auto all = whole(L);
    Matrix<Expression> kappa = killing_form(L);
    // radical = [L, L]^perp; the nilradical lies in the kernel of kappa, and
    // equals radical ∩ ker(kappa) when that intersection is nilpotent
    std::vector<Coords> radical = orthogonal(kappa, v.derived);
    std::vector<Coords> ker = orthogonal(kappa, all);
    std::vector<Coords> N = subspace::intersect(radical, ker, n);
    if (N.empty() || N.size() == n) {
        v.note = N.empty() ? "no nilpotent ideal detected" : "nilpotent, not abelian or Heisenberg-Weyl";
        return v;
    }
    if (!subset(subspace::bracket(L, all, N), N)) throw std::logic_error("kernel of the Killing form is not an ideal");
    std::vector<std::vector<Coords>> series{N};
    while (!series.back().empty()) {
        auto next = subspace::bracket(L, N, series.back());
        if (next.size() == series.back().size()) {
            v.note = "radical ∩ ker(kappa) is not nilpotent";
            return v;
        }
        series.push_back(std::move(next));
    }
    series.pop_back();

    Verdict ideal = classify(restrict_to(L, N));
    if (!(ideal.derived_dim == 0 || ideal.name.front() == 'W')) {
        v.note = "nilradical " + ideal.summary() + " is not abelian or Heisenberg-Weyl";
        return v;
    }
    // complement: basis vectors in order, skipping those dependent on N and earlier picks
    std::vector<Coords> S, acc = N;
    for (auto& e : all) {
        if (subspace::contains(acc, e)) continue;
        S.push_back(e);
        acc.push_back(e);
        acc = subspace::span(acc, n);
    }
    auto closed = close_complement(L, S, series);
    if (!closed) {
        v.note = "no complementary subalgebra to the nilradical was found";
        return v;
    }
    S = *closed;
    Verdict comp = classify(restrict_to(L, S));
    if (!comp.classified()) {
        v.note = "complement " + comp.summary() + " is not recognized";
        return v;
    }
    bool acts = !subspace::bracket(L, S, N).empty();
    v.ideal_basis = N;
    v.complement_basis = S;
    v.ideal_name = ideal.name;
    v.complement_name = comp.name;
    v.killing_signature = comp.killing_signature;
    v.name = comp.name + (acts ? kOplusS : kOplus) + ideal.name;
    v.description = acts ? "semidirect sum" : "direct sum";
    return v;
}

} // namespace liesym
