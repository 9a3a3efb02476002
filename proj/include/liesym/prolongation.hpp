#pragma once

#include "liesym/pde.hpp"
#include "liesym/vector_field.hpp"

#include <map>
#include <string>
#include <vector>

namespace liesym {

/// Extended coefficient eta^J for one jet J:
/// eta^J = D_J(eta - sum_i xi^i u_i) + sum_i xi^i u_{J,i}.
Expression extended_coefficient(const VectorField& vf, const Symbol& jet);

/// Second prolongation: eta^J for every first-order jet and every purely
/// spatial second-order jet of the field's variables (u_t, u_x, u_y, u_xx,
/// u_xy, u_yy for (t, x, y)). Values are not restricted to the solution manifold.
std::map<Symbol, Expression> prolong2(const VectorField& vf);

/// pr X (F - dep_t) restricted to the solution manifold of `pde`.
/// Zero exactly when `vf` is a point symmetry.
Expression residual(const VectorField& vf, const EvolutionPDE& pde);

/// One monomial in a set of symbols, as (symbol, power) pairs.
using Monomial = std::vector<std::pair<Symbol, int>>;

std::string monomial_text(const Monomial& m);

struct DeterminingEquation {
    Monomial jet_monomial;   // in the dependent symbol and its jets
    Monomial point_monomial; // in the spatial independents
    Expression coefficient;  // must vanish
};

/// The residual as a polynomial in jets, then split by the spatial variables.
struct DeterminingSystem {
    /// Jet monomials in graded lexicographic order, each with its full coefficient.
    std::vector<std::pair<Monomial, Expression>> by_jet;
    /// Fully split equations, nonzero only.
    std::vector<DeterminingEquation> equations;

    bool is_zero() const { return equations.empty(); }
};

/// Throws NonPolynomial when jets or spatial variables occur non-polynomially.
DeterminingSystem determining_equations(const VectorField& ansatz, const EvolutionPDE& pde);
DeterminingSystem split_residual(const Expression& residual, const EvolutionPDE& pde);

/// The six generators of the constant-coefficient HPZ equation with their
/// coefficient functions. Two readings of the C1/E1 entries exist.
enum class C1Reading {
    Product, ///< C1 = (R - omega) W, E1 = (R + omega) W
    Literal, ///< C1 = R - omega W,   E1 = R + omega W
};

struct SymmetryFixture {
    std::vector<std::string> names; // "delta1" ... "delta6"
    std::vector<VectorField> generators;
    /// A1, A2, B1, B2, C, C1..C4, E, E1..E4
    std::map<std::string, Expression> coefficients;

    const VectorField& operator[](const std::string& name) const;
};

SymmetryFixture hpz_fixture(C1Reading reading = C1Reading::Product);

} // namespace liesym
