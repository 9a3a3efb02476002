#pragma once

#include "liesym/pde.hpp"
#include "liesym/prolongation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liesym {

/// Generator outside the class c(t) (p d_x + q d_y + (m x + n y) u d_u).
class UnsupportedGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Residual x or y dependence after substitution.
class ReductionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invariant r = alpha x + beta y and multiplier u = z(t, r) exp(Q) with
/// Q = q1 x y + q2 y^2 + q3 x^2.
struct ReductionMap {
    VectorField generator;
    // generator data after dividing by the t-dependent factor
    Expression p, q, m, n;
    Expression alpha, beta;
    Expression q1, q2, q3;
    /// Named constants (K1, K2, K3) when the map came from the fixture.
    std::map<std::string, Expression> constants;

    Expression invariant() const;
    Expression multiplier_exponent() const;
};

/// Builds the map for a generator of the supported class. `preferred`, if
/// given, is used as the invariant after checking it is annihilated and
/// linear in x, y; otherwise r = q x - p y.
ReductionMap invariants_for(const VectorField& vf, const std::optional<Expression>& preferred = std::nullopt);

struct ReducedEquation {
    EvolutionPDE pde;          // z_t = G(r, z, z_r, z_rr), z_t coefficient normalized to -1
    Expression normalization;  // factor applied to u_t - F after substitution (exp(-Q))
    std::string certificate;   // "no-residual-xy"

    /// factor * (G - z_t), the form carrying an overall factor on z_t.
    Expression scaled_form(const Expression& factor) const;
};

/// Substitutes u = z(t, r) exp(Q), divides by exp(Q) and rewrites in r.
/// Throws ReductionFailure when x or y survives.
ReducedEquation reduce(const EvolutionPDE& pde, const ReductionMap& map);

/// u = exp(rate t / 2) z(x, y), the invariant form of 2 d_t + rate u d_u.
/// The default rate is dF/du (R for hpz). Throws for non-autonomous equations.
StationaryEquation reduce_time(const EvolutionPDE& pde, const std::optional<Expression>& rate = std::nullopt);

/// Guards for the hpz reductions at a binding: omega = 0 (repeated root) and
/// R V + W = 0 (singular constants) are refused.
void check_reduction_binding(const ParameterBinding& b);

/// Printed characteristics for delta3..delta6 of the hpz fixture, with the
/// constants K1, K2, K3.
struct PrintedReduction {
    Expression invariant;
    std::optional<Expression> multiplier_exponent;
    std::map<std::string, Expression> constants;
    std::string reduced_equation; // registry name of the transcribed reduced form
};

const PrintedReduction& printed_reduction(const std::string& generator);

/// The reduction map of a fixture generator using its printed invariant.
ReductionMap fixture_map(const SymmetryFixture& fixture, const std::string& generator);

struct TermComparison {
    Symbol jet;          // z, z_r or z_rr
    Expression derived;  // coefficient in factor * (G - z_t)
    Expression printed;  // coefficient in the transcribed form
    bool match = false;
};

/// Compares factor * (derived G) with the transcribed registry entry term by term.
std::vector<TermComparison> compare_with_transcription(const ReducedEquation& derived, const EquationEntry& entry);

} // namespace liesym
