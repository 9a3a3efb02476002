#pragma once

#include "liesym/linalg.hpp"
#include "liesym/prolongation.hpp"
#include "liesym/upoly.hpp"

#include <string>
#include <vector>

namespace liesym {

/// Polynomial degree in t of the trial solutions tried per exponent.
inline constexpr int kDefaultTrialDegree = 2;

/// Degree bounds of the symmetry ansatz: xi^t = a(t), spatial xi affine in
/// the spatial variables, eta = f u with f quadratic in them; every
/// coefficient is an unknown function of t.
struct Ansatz {
    int trial_degree = kDefaultTrialDegree;
    int xi_degree = 1;
    int eta_degree = 2;
};

struct AnsatzField {
    VectorField field;
    std::vector<Symbol> unknowns; // function symbols, xi^t unknown first
};

AnsatzField build_ansatz(const EvolutionPDE& pde, const Ansatz& ansatz);

/// Binding forces an irrational exponent.
class IrrationalExponents : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Determining system leaves an unknown function free.
class InfiniteSolutionSpace : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SymmetryBasis {
    std::string equation;
    ParameterBinding binding;
    std::vector<VectorField> generators;
    std::vector<Rational> exponents; // exponent lambda of each generator (e^{lambda t} p(t))
    std::vector<bool> residual_checks;
    /// Degree of the determinant of the determining operator: the dimension
    /// of the solution space inside the ansatz.
    int operator_degree = 0;
    std::vector<std::pair<Rational, int>> exponent_multiplicities;
    std::vector<std::string> notes;

    std::size_t dimension() const { return generators.size(); }
};

/// Linear ODE system P(d/dt) F = 0 for the ansatz unknowns F.
struct DeterminingOperator {
    std::vector<Symbol> unknowns;
    std::vector<std::vector<UPoly>> rows;
};

DeterminingOperator determining_operator(const DeterminingSystem& sys, const std::vector<Symbol>& unknowns);

/// Triangularizes P over Q[s] by unimodular row operations and returns the
/// diagonal. Throws InfiniteSolutionSpace when P lacks full column rank.
std::vector<UPoly> triangular_diagonal(const DeterminingOperator& op);

/// Discovery at a rational binding (omega rational, R V + W != 0 when the
/// equation uses parameters).
SymmetryBasis solve_determining(const EvolutionPDE& pde, const Ansatz& ansatz, const ParameterBinding& binding);

struct ResidualReport {
    std::vector<std::string> names;
    std::vector<Expression> residuals;

    bool all_zero() const;
};

/// Symbolic residual of every fixture generator; failures are entries, not exceptions.
ResidualReport verify_basis(const SymmetryFixture& fixture, const EvolutionPDE& pde);

/// Rows are fields, columns are (component, structural monomial) pairs in
/// a fixed order; entries are the coefficient-field factors.
Matrix<Expression> coefficient_matrix(const std::vector<VectorField>& fields);
/// As above; throws NonRationalValue when an entry is not a rational number.
Matrix<Rational> rational_coefficient_matrix(const std::vector<VectorField>& fields);
/// Dimension of the span over constants.
std::size_t span_rank(const std::vector<VectorField>& fields);

struct GeneratorProfile {
    Expression a; // xi^t
    Expression b; // xi^r - a'(t) r / 2
    Expression f; // (eta / z) at r = 0
    Expression F; // eta / z - f
    bool a_depends_on_t_only = false;
    bool b_free_of_r = false;
    bool eta_linear_in_z = false;

    bool shape_holds() const { return a_depends_on_t_only && b_free_of_r && eta_linear_in_z; }
};

struct SymmetryProfile {
    std::vector<GeneratorProfile> generators;
    /// Orders of the linear ODEs satisfied by a, by b on {a = 0} and by f on {a = b = 0}.
    int a_order = 0;
    int b_order = 0;
    int f_order = 0;
    std::size_t with_time_part = 0;    // generators with a != 0
    std::size_t without_time_part = 0; // generators with a == 0

    bool all_shapes_hold() const;
};

/// For a basis of a (1+1) equation in t and one spatial variable (r, or x for heat).
SymmetryProfile profile_basis(const SymmetryBasis& basis);

} // namespace liesym
