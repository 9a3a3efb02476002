#pragma once

#include "liesym/expression.hpp"
#include "liesym/parameters.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liesym {

/// Raised when a total derivative would leave the order-3 jet space.
class JetOrderOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scalar equation solved for the first time derivative: dep_t = F.
class EvolutionPDE {
public:
    /// `independents` must start with t; F may not contain time-derivative
    /// jets and is at most second order in the spatial jets.
    EvolutionPDE(std::vector<Symbol> independents, Symbol dependent, Expression rhs, std::string name = {});

    const std::string& name() const { return name_; }
    const std::vector<Symbol>& independents() const { return independents_; }
    std::vector<Symbol> spatial() const { return {independents_.begin() + 1, independents_.end()}; }
    const Symbol& dependent() const { return dependent_; }
    const Expression& rhs() const { return rhs_; }
    Symbol time_jet() const;

    int spatial_order() const;
    int time_order() const { return 1; }
    bool is_autonomous() const { return !depends_on(rhs_, sym::t()); }

    EvolutionPDE bind(const ParameterBinding& b) const;
    EvolutionPDE renamed(std::string name) const;

    /// "u_t = F"
    std::string str() const;

private:
    std::vector<Symbol> independents_;
    Symbol dependent_;
    Expression rhs_;
    std::string name_;
};

/// An equation G = 0 without a time variable.
struct StationaryEquation {
    std::vector<Symbol> independents;
    Symbol dependent;
    Expression lhs;

    std::string str() const { return render(lhs) + " = 0"; }
};

/// u_t = R u - x u_y + R x u_x + S y u_x + V u_xy + W u_xx
EvolutionPDE make_hpz();
/// u_t = u_xx
EvolutionPDE make_heat();

/// Total derivative D_v e = de/dv + sum_J dep_{J+v} de/d(dep_J), with
/// unknown functions of t differentiated by the chain rule.
Expression total_derivative(const Expression& e, const Symbol& v);
/// As above, with time-derivative jets eliminated on the solution manifold
/// of `pde` before and after differentiating.
Expression total_derivative(const Expression& e, const Symbol& v, const EvolutionPDE& pde);

/// Replaces every jet carrying a t-derivative by its value on the solution
/// manifold: u_t = F, u_tx = D_x F, u_ty = D_y F, u_tt = D_t F (inner u_t
/// already replaced). Throws JetOrderOverflow when a replacement would
/// exceed order 3.
Expression eliminate_time_jets(const Expression& e, const EvolutionPDE& pde);

/// Solution-manifold value of a single time-derivative jet.
Expression time_jet_value(const Symbol& jet, const EvolutionPDE& pde);

/// Built-in equations by name.
struct EquationEntry {
    std::string name;
    std::string description;
    std::optional<EvolutionPDE> evolution;
    std::optional<StationaryEquation> stationary;
    /// Overall factor of the transcribed form: transcribed lhs = factor * (F - dep_t).
    Expression printed_factor = Expression(1);
};

const std::vector<std::string>& equation_names();
const EquationEntry& equation_entry(const std::string& name);
/// Throws std::invalid_argument for unknown or stationary entries.
EvolutionPDE equation_by_name(const std::string& name);

} // namespace liesym
