#pragma once

#include "liesym/expression.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace liesym {

/// Exact values for the equation parameters R, S, V, W and the surd omega.
///
/// omega is filled in automatically when R^2 - 4S is a perfect rational
/// square; an explicit omega must satisfy omega^2 = R^2 - 4S and be >= 0.
class ParameterBinding {
public:
    ParameterBinding() = default;

    /// Parses "R=5,S=4,V=1,W=1" (whitespace and ';' also accepted as separators).
    static ParameterBinding parse(std::string_view text);

    void set(const Symbol& parameter, const Rational& value);
    std::optional<Rational> get(const Symbol& parameter) const;
    bool has(const Symbol& parameter) const { return values_.count(parameter) != 0; }
    bool empty() const { return values_.empty(); }
    const std::map<Symbol, Rational>& values() const { return values_; }

    /// Throws std::invalid_argument when R^2 - 4S < 0 or omega is inconsistent.
    void validate() const;
    /// Additionally requires R, S, V, W, omega all bound and rational with RV + W != 0.
    void require_discovery_ready() const;

    /// Substitutes every bound parameter.
    Expression apply(const Expression& e) const;

    std::string str() const;

private:
    void complete();
    std::map<Symbol, Rational> values_;
};

} // namespace liesym
