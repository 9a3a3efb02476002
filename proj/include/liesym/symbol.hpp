#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace liesym {

/// Kinds are ordered: coefficient-ring symbols first, then structural ones.
enum class SymbolKind : std::uint8_t {
    Parameter,   // R, S, V, W
    Surd,        // omega = sqrt(R^2 - 4 S)
    Constant,    // user-declared constants
    Independent, // t, x, y, r
    Dependent,   // u, z
    Function,    // unknown function of t (and its t-derivatives), used by ansatz solving
    Jet,         // derivative of a dependent symbol
};

/// Positions in a jet multi-index.
enum class Axis : std::uint8_t { T = 0, X = 1, Y = 2, R = 3 };

using MultiIndex = std::array<std::uint8_t, 4>;

inline constexpr int kMaxJetOrder = 3;

/// Value-type identifier for every atom an Expression can contain.
///
/// Jets carry the dependent name in `name` and derivative counts over
/// (t, x, y, r) in `index`; functions carry their t-derivative order in
/// `index[0]`.
class Symbol {
public:
    Symbol() = default;
    Symbol(SymbolKind kind, std::string name, MultiIndex index = {})
        : kind_(kind), name_(std::move(name)), index_(index) {}

    SymbolKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const MultiIndex& index() const { return index_; }

    bool is_coefficient() const {
        return kind_ == SymbolKind::Parameter || kind_ == SymbolKind::Surd ||
               kind_ == SymbolKind::Constant;
    }
    bool is_jet() const { return kind_ == SymbolKind::Jet; }
    bool is_function() const { return kind_ == SymbolKind::Function; }
    bool is_independent() const { return kind_ == SymbolKind::Independent; }
    bool is_dependent() const { return kind_ == SymbolKind::Dependent; }

    int jet_order() const { return index_[0] + index_[1] + index_[2] + index_[3]; }
    int count(Axis a) const { return index_[static_cast<int>(a)]; }
    int derivative_order() const { return index_[0]; }

    /// Text used by the printer and accepted by the parser (functions excepted).
    std::string text() const;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.kind_ == b.kind_ && a.index_ == b.index_ && a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);

private:
    SymbolKind kind_ = SymbolKind::Constant;
    std::string name_;
    MultiIndex index_{};
};

namespace sym {

Symbol t();
Symbol x();
Symbol y();
Symbol r();
Symbol u();
Symbol z();
Symbol R();
Symbol S();
Symbol V();
Symbol W();
Symbol omega();
Symbol constant(std::string name);
Symbol function(std::string name, int derivative_order = 0);

/// Jet of `dependent` with the given derivative counts over (t, x, y, r).
/// A zero multi-index returns the dependent symbol itself.
Symbol jet(const Symbol& dependent, MultiIndex index);

/// Axis of an independent-variable symbol; throws for anything else.
Axis axis_of(const Symbol& independent);

/// Jet obtained by differentiating `base` (a dependent or jet symbol) once more.
Symbol jet_shift(const Symbol& base, Axis a);

} // namespace sym

} // namespace liesym
