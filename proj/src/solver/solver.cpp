#include "liesym/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liesym {

DeterminingOperator determining_operator(const DeterminingSystem& sys, const std::vector<Symbol>& unknowns) {
    DeterminingOperator op;
    op.unknowns = unknowns;
    std::map<std::string, std::size_t> column;
    for (std::size_t j = 0; j < unknowns.size(); ++j) column[unknowns[j].name()] = j;
    for (auto& eq : sys.equations) {
        std::vector<Symbol> fs;
        for (const Symbol& s : symbols(eq.coefficient))
            if (s.is_function()) fs.push_back(s);
        std::vector<std::vector<Rational>> row(unknowns.size());
        for (auto& term : collect(eq.coefficient, fs)) {
            int total = 0;
            std::size_t which = 0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                total += term.exponents[i];
                if (term.exponents[i] != 0) which = i;
            }
            auto q = term.coefficient.as_rational();
            if (total != 1 || !q)
                throw std::runtime_error("determining equation is not linear with constant coefficients: " +
                                         render(eq.coefficient));
            auto it = column.find(fs[which].name());
            if (it == column.end()) throw std::logic_error("unexpected unknown " + fs[which].name());
            auto& coeffs = row[it->second];
            auto k = static_cast<std::size_t>(fs[which].derivative_order());
            if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
            coeffs[k] += *q;
        }
        std::vector<UPoly> prow;
        for (auto& c : row) prow.emplace_back(c);
        op.rows.push_back(std::move(prow));
    }
    return op;
}

std::vector<UPoly> triangular_diagonal(const DeterminingOperator& op) {
    auto rows = op.rows;
    const std::size_t n = op.unknowns.size();
    std::vector<UPoly> diag;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            // pivot: lowest-degree nonzero entry in column c at or below row r
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (!rows[i][c].is_zero() && (best == rows.size() || rows[i][c].degree() < rows[best][c].degree()))
                    best = i;
            if (best == rows.size())
                throw InfiniteSolutionSpace("the determining system leaves " + op.unknowns[c].text() +
                                            " unconstrained; the finite part is not determined");
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                UPoly q = rows[i][c].divmod(rows[r][c]).first;
                for (std::size_t j = c; j < n; ++j) rows[i][j] = rows[i][j] - q * rows[r][j];
                if (!rows[i][c].is_zero()) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(rows[r][c].monic());
        ++r;
    }
    return diag;
}

namespace {

Integer factorial(long n) {
    Integer f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

Integer binomial(long n, long k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

/// Coefficient of (s - lambda)^m in p.
Rational taylor(const UPoly& p, const Rational& lambda, int m) {
    Rational acc = 0;
    for (int n = m; n <= p.degree(); ++n) {
        Rational pw = 1;
        for (int k = 0; k < n - m; ++k) pw *= lambda;
        acc += p.coefficient(n) * Rational(binomial(n, m)) * pw;
    }
    return acc;
}

bool uses_coefficients(const Expression& e) {
    for (const Symbol& s : symbols(e))
        if (s.is_coefficient()) return true;
    return false;
}

} // namespace

SymmetryBasis solve_determining(const EvolutionPDE& pde, const Ansatz& ansatz, const ParameterBinding& binding) {
    if (ansatz.trial_degree < 0) throw std::invalid_argument("trial degree must be non-negative");
    SymmetryBasis out;
    out.equation = pde.name();
    out.binding = binding;
    if (!binding.empty()) binding.require_discovery_ready();
    EvolutionPDE bound = pde.bind(binding);
    if (uses_coefficients(bound.rhs()))
        throw std::invalid_argument("discovery needs exact values for every parameter of " +
                                    (pde.name().empty() ? std::string("the equation") : pde.name()) +
                                    "; pass R, S, V, W");

    AnsatzField an = build_ansatz(bound, ansatz);
    DeterminingSystem sys = determining_equations(an.field, bound);
    DeterminingOperator op = determining_operator(sys, an.unknowns);
    std::vector<UPoly> diag = triangular_diagonal(op);

    std::map<Rational, int> mult;
    for (auto& d : diag) {
        out.operator_degree += d.degree();
        if (d.degree() <= 0) continue;
        RationalRoots rr = rational_roots(d);
        if (rr.remaining_degree > 0)
            throw IrrationalExponents("the determining operator has irrational exponents at this binding; "
                                      "choose R, S with R^2 - 4*S a perfect rational square");
        for (auto& [root, m] : rr.roots) mult[root] += m;
    }
    out.exponent_multiplicities.assign(mult.begin(), mult.end());

    const std::size_t n = an.unknowns.size();
    const int d = ansatz.trial_degree;
    const std::size_t width = static_cast<std::size_t>(d) + 1;
    const Expression t(sym::t());
    for (auto& [lambda, m] : mult) {
        if (m > d + 1)
            out.notes.push_back("exponent " + to_string(lambda) + " has multiplicity " + std::to_string(m) +
                                " above the trial degree bound " + std::to_string(d) +
                                "; higher powers of t are not searched");
        // P(D)[e^{lambda t} q] = e^{lambda t} P(D + lambda) q, coefficient of t^l
        Matrix<Rational> A(0, n * width);
        for (auto& prow : op.rows) {
            for (int l = 0; l <= d; ++l) {
                std::vector<Rational> row(n * width, Rational(0));
                for (std::size_t j = 0; j < n; ++j)
                    for (int k = l; k <= d; ++k)
                        row[j * width + static_cast<std::size_t>(k)] =
                            taylor(prow[j], lambda, k - l) * Rational(factorial(k) / factorial(l));
                A.append_row(row);
            }
        }
        auto null = nullspace(A);
        if (null.empty()) continue;
        Matrix<Rational> basis = Matrix<Rational>::from_rows(null, n * width);
        rref(basis);
        Expression e = exp(Expression(lambda) * t);
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            std::map<Symbol, Expression> repl;
            bool any = false;
            for (std::size_t j = 0; j < n; ++j) {
                Expression q;
                for (std::size_t k = 0; k < width; ++k)
                    if (basis.at(i, j * width + k) != 0) q += Expression(basis.at(i, j * width + k)) * pow(t, static_cast<long>(k));
                any = any || !q.is_zero();
                repl.emplace(an.unknowns[j], q * e);
            }
            if (!any) continue;
            VectorField g = an.field.map([&](const Expression& c) { return substitute(c, repl); });
            out.generators.push_back(g);
            out.exponents.push_back(lambda);
        }
    }
    for (auto& g : out.generators) {
        bool ok = residual(g, bound).is_zero();
        out.residual_checks.push_back(ok);
        if (!ok) throw std::logic_error("solver produced a field with nonzero residual: " + g.str());
    }
    if (static_cast<int>(out.dimension()) != out.operator_degree)
        out.notes.push_back("found " + std::to_string(out.dimension()) + " of " + std::to_string(out.operator_degree) +
                            " solutions; raise the trial degree");
    if (span_rank(out.generators) != out.dimension()) throw std::logic_error("solver basis is linearly dependent");
    return out;
}

bool ResidualReport::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Expression& e) { return e.is_zero(); });
}

ResidualReport verify_basis(const SymmetryFixture& fixture, const EvolutionPDE& pde) {
    ResidualReport r;
    for (std::size_t i = 0; i < fixture.generators.size(); ++i) {
        r.names.push_back(fixture.names[i]);
        r.residuals.push_back(residual(fixture.generators[i], pde));
    }
    return r;
}

Matrix<Expression> coefficient_matrix(const std::vector<VectorField>& fields) {
    std::map<std::pair<std::size_t, Expression>, std::size_t> column;
    std::vector<std::vector<std::pair<std::pair<std::size_t, Expression>, Expression>>> entries;
    for (auto& f : fields) {
        std::vector<const Expression*> comps;
        for (auto& x : f.xi()) comps.push_back(&x);
        comps.push_back(&f.eta());
        auto& row = entries.emplace_back();
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (auto& [mono, coeff] : structural_terms(*comps[c])) {
                std::pair<std::size_t, Expression> key{c, mono};
                column.emplace(key, 0);
                row.emplace_back(key, coeff);
            }
    }
    std::size_t k = 0;
    for (auto& [key, idx] : column) idx = k++;
    Matrix<Expression> m(fields.size(), column.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (auto& [key, coeff] : entries[i]) m.at(i, column.at(key)) += coeff;
    return m;
}

Matrix<Rational> rational_coefficient_matrix(const std::vector<VectorField>& fields) {
    Matrix<Expression> e = coefficient_matrix(fields);
    Matrix<Rational> m(e.rows(), e.cols());
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) {
            auto q = e.at(i, j).as_rational();
            if (!q) throw NonRationalValue("coefficient " + render(e.at(i, j)) + " is not rational");
            m.at(i, j) = *q;
        }
    return m;
}

std::size_t span_rank(const std::vector<VectorField>& fields) {
    if (fields.empty()) return 0;
    return rank(coefficient_matrix(fields));
}

} // namespace liesym
