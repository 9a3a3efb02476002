#pragma once

#include "liesym/expression.hpp"
#include "liesym/parameters.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace liesym {

class EvolutionPDE;

/// Point vector field sum_i xi^i d/dx_i + eta d/d(dep) with jet-free coefficients.
class VectorField {
public:
    VectorField() = default;
    /// Throws std::invalid_argument when a coefficient contains a jet variable
    /// or the sizes disagree.
    VectorField(std::vector<Symbol> independents, Symbol dependent, std::vector<Expression> xi, Expression eta);

    /// Field over the variables of `pde`, all coefficients zero.
    static VectorField zero_for(const EvolutionPDE& pde);

    const std::vector<Symbol>& independents() const { return independents_; }
    const Symbol& dependent() const { return dependent_; }
    const std::vector<Expression>& xi() const { return xi_; }
    const Expression& xi(const Symbol& v) const;
    const Expression& eta() const { return eta_; }

    VectorField with_xi(const Symbol& v, const Expression& e) const;
    VectorField with_eta(const Expression& e) const;

    /// X(f) for a jet-free function f.
    Expression apply(const Expression& f) const;

    bool is_zero() const;
    VectorField bind(const ParameterBinding& b) const;
    /// Coefficient-wise map, e.g. simplification or substitution.
    template <class F>
    VectorField map(F f) const {
        std::vector<Expression> xi;
        for (auto& c : xi_) xi.push_back(f(c));
        return VectorField(independents_, dependent_, std::move(xi), f(eta_));
    }

    /// "xi_t=...; xi_x=...; xi_y=...; eta=..."
    std::string str() const;

    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Expression& c, const VectorField& a);
    friend bool operator==(const VectorField& a, const VectorField& b);

private:
    std::vector<Symbol> independents_;
    Symbol dependent_;
    std::vector<Expression> xi_;
    Expression eta_;
};

/// Parses "xi_t=...; xi_x=...; eta=..." over the variables of `pde`; omitted
/// fields are zero. Errors are ParseError with positions in `text`.
VectorField parse_generator(std::string_view text, const EvolutionPDE& pde, const ParseOptions& options = {});
VectorField parse_generator(std::string_view text, const std::vector<Symbol>& independents, const Symbol& dependent,
                            const ParseOptions& options = {});

} // namespace liesym
