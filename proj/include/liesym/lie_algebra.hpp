#pragma once

#include "liesym/linalg.hpp"
#include "liesym/vector_field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

/// Coordinates with respect to an algebra's basis.
using Coords = std::vector<Expression>;

/// [X, Y] with coefficients X(Y^a) - Y(X^a).
VectorField commutator(const VectorField& X, const VectorField& Y);

/// A commutator that is not in the span of the basis, or a dependent basis.
class NonClosure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k over Q(R, S, V, W)[omega].
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// Abstract algebra from a tensor; checks antisymmetry and Jacobi.
    static LieAlgebra from_tensor(std::vector<std::string> names, std::vector<std::vector<Coords>> c);

    std::size_t dimension() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Realization as vector fields; empty for abstract algebras.
    const std::vector<VectorField>& fields() const { return fields_; }
    const std::vector<std::vector<Coords>>& tensor() const { return c_; }
    const Expression& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }
    /// "symbolic", or the binding used when symbolic closure failed.
    const std::string& closure_mode() const { return closure_mode_; }

    Coords unit(std::size_t i) const;
    Coords bracket(const Coords& a, const Coords& b) const;
    /// ad(e_i) as a matrix acting on coordinate columns.
    Matrix<Expression> ad(const Coords& a) const;

    bool antisymmetric() const;
    /// First failing (i, j, k) triple, if any.
    std::optional<std::array<std::size_t, 3>> jacobi_failure() const;

    /// New basis e'_i = sum_j rows[i][j] e_j (rows invertible).
    LieAlgebra change_basis(const std::vector<Coords>& rows, std::vector<std::string> names = {}) const;

    /// "delta1 - 1/2*delta3"
    std::string combination(const Coords& v) const;

private:
    std::vector<std::string> names_;
    std::vector<VectorField> fields_;
    std::vector<std::vector<Coords>> c_;
    std::string closure_mode_ = "symbolic";

    friend LieAlgebra structure_constants(const std::vector<VectorField>&, std::vector<std::string>,
                                          const std::optional<ParameterBinding>&);
};

/// Structure constants of the span of `basis`. Each commutator is projected
/// onto the basis by an exact solve in the monomial coefficients. When that
/// fails symbolically and `fallback` is given, the bound fields are used and
/// the binding is recorded as the closure mode. Throws NonClosure naming the
/// offending pair.
LieAlgebra structure_constants(const std::vector<VectorField>& basis, std::vector<std::string> names = {},
                               const std::optional<ParameterBinding>& fallback = std::nullopt);

/// Subspace helpers over the coordinate space; all return bases in reduced echelon form.
namespace subspace {
std::vector<Coords> span(const std::vector<Coords>& vectors, std::size_t dim);
bool contains(const std::vector<Coords>& basis, const Coords& v);
std::vector<Coords> intersect(const std::vector<Coords>& a, const std::vector<Coords>& b, std::size_t dim);
std::vector<Coords> bracket(const LieAlgebra& L, const std::vector<Coords>& a, const std::vector<Coords>& b);
} // namespace subspace

std::vector<Coords> center(const LieAlgebra& L);
std::vector<Coords> derived_algebra(const LieAlgebra& L);
/// Dimensions of L, [L, L], [[L, L], [L, L]], ... down to 0 or stabilization.
std::vector<std::size_t> derived_series(const LieAlgebra& L);
/// Dimensions of L, [L, L], [L, [L, L]], ...
std::vector<std::size_t> lower_central_series(const LieAlgebra& L);
/// kappa(a, b) = tr(ad a ad b) in the basis.
Matrix<Expression> killing_form(const LieAlgebra& L);
/// (positive, negative, zero) counts by exact congruence diagonalization;
/// nullopt when an entry is not rational.
std::optional<std::array<int, 3>> signature(const Matrix<Expression>& symmetric);

/// Subalgebra spanned by `basis`, with coordinates relative to that basis.
LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<Coords>& basis, std::vector<std::string> names = {});

struct Verdict {
    std::size_t dimension = 0;
    std::size_t center_dim = 0;
    std::size_t derived_dim = 0;
    std::vector<std::size_t> derived_series;
    std::vector<std::size_t> lower_central_series;
    std::string name = "unclassified";
    std::string description;
    std::string mubarakzyanov_label;
    std::string note;
    std::vector<Coords> center;
    std::vector<Coords> derived;
    /// Nilpotent ideal of a semidirect decomposition.
    std::vector<Coords> ideal_basis;
    /// Complementary subalgebra acting on the ideal.
    std::vector<Coords> complement_basis;
    std::string ideal_name;
    std::string complement_name;
    std::optional<std::array<int, 3>> killing_signature;

    bool classified() const { return name != "unclassified"; }
    /// "W5 (Heisenberg-Weyl, dim 5)"
    std::string summary() const;
};

/// Recognizes nA1, A2, Heisenberg-Weyl algebras, sl(2,R), so(3) and
/// semidirect sums of a known complement with an abelian or Heisenberg
/// nilradical. Anything else, or dimension above 6, is "unclassified" with
/// the invariants filled in.
Verdict classify(const LieAlgebra& L);

} // namespace liesym
