#include "liesym/vector_field.hpp"

#include "liesym/pde.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym {

namespace {

void require_jet_free(const Expression& e, const char* what) {
    for (const Symbol& s : symbols(e))
        if (s.is_jet())
            throw std::invalid_argument(std::string("vector field coefficient ") + what + " contains jet variable " +
                                        s.text());
}

void require_compatible(const VectorField& a, const VectorField& b) {
    if (a.independents() != b.independents() || a.dependent() != b.dependent())
        throw std::invalid_argument("vector fields live on different variable sets");
}

} // namespace

VectorField::VectorField(std::vector<Symbol> independents, Symbol dependent, std::vector<Expression> xi, Expression eta)
    : independents_(std::move(independents)), dependent_(std::move(dependent)), xi_(std::move(xi)),
      eta_(simplify(eta)) {
    if (xi_.size() != independents_.size()) throw std::invalid_argument("one xi coefficient per independent variable");
    for (auto& c : xi_) {
        c = simplify(c);
        require_jet_free(c, "xi");
    }
    require_jet_free(eta_, "eta");
}

VectorField VectorField::zero_for(const EvolutionPDE& pde) {
    return VectorField(pde.independents(), pde.dependent(), std::vector<Expression>(pde.independents().size()),
                       Expression());
}

const Expression& VectorField::xi(const Symbol& v) const {
    auto it = std::find(independents_.begin(), independents_.end(), v);
    if (it == independents_.end()) throw std::invalid_argument("no xi coefficient for '" + v.text() + "'");
    return xi_[static_cast<std::size_t>(it - independents_.begin())];
}

VectorField VectorField::with_xi(const Symbol& v, const Expression& e) const {
    VectorField out = *this;
    auto it = std::find(independents_.begin(), independents_.end(), v);
    if (it == independents_.end()) throw std::invalid_argument("no xi coefficient for '" + v.text() + "'");
    require_jet_free(e, "xi");
    out.xi_[static_cast<std::size_t>(it - independents_.begin())] = simplify(e);
    return out;
}

VectorField VectorField::with_eta(const Expression& e) const {
    require_jet_free(e, "eta");
    VectorField out = *this;
    out.eta_ = simplify(e);
    return out;
}

Expression VectorField::apply(const Expression& f) const {
    Expression out;
    for (std::size_t i = 0; i < independents_.size(); ++i)
        if (!xi_[i].is_zero()) out += xi_[i] * differentiate(f, independents_[i]);
    if (!eta_.is_zero()) out += eta_ * partial(f, dependent_);
    return out;
}

bool VectorField::is_zero() const {
    return eta_.is_zero() && std::all_of(xi_.begin(), xi_.end(), [](const Expression& e) { return e.is_zero(); });
}

VectorField VectorField::bind(const ParameterBinding& b) const {
    return map([&](const Expression& e) { return b.apply(e); });
}

std::string VectorField::str() const {
    std::string out;
    for (std::size_t i = 0; i < independents_.size(); ++i) out += "xi_" + independents_[i].text() + "=" + render(xi_[i]) + "; ";
    return out + "eta=" + render(eta_);
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    require_compatible(a, b);
    std::vector<Expression> xi;
    for (std::size_t i = 0; i < a.xi_.size(); ++i) xi.push_back(a.xi_[i] + b.xi_[i]);
    return VectorField(a.independents_, a.dependent_, std::move(xi), a.eta_ + b.eta_);
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + Expression(-1) * b; }

VectorField operator*(const Expression& c, const VectorField& a) {
    return a.map([&](const Expression& e) { return c * e; });
}

bool operator==(const VectorField& a, const VectorField& b) {
    return a.independents_ == b.independents_ && a.dependent_ == b.dependent_ && a.xi_ == b.xi_ && a.eta_ == b.eta_;
}

VectorField parse_generator(std::string_view text, const std::vector<Symbol>& independents, const Symbol& dependent,
                            const ParseOptions& options) {
    std::vector<Expression> xi(independents.size());
    Expression eta;
    std::vector<bool> seen(independents.size() + 1, false);
    std::size_t start = 0;
    // line/column of an offset in `text`
    auto position = [&](std::size_t offset) {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return std::pair{line, col};
    };
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view field = text.substr(start, end - start);
        std::size_t first = field.find_first_not_of(" \t\n");
        if (first != std::string_view::npos) {
            std::size_t eq = field.find('=');
            auto [line, col] = position(start + first);
            if (eq == std::string_view::npos) throw ParseError("generator field lacks '='", line, col);
            std::string key(field.substr(first, eq - first));
            key.erase(key.find_last_not_of(" \t\n") + 1);
            std::size_t slot = independents.size();
            // xi_<v> for a variable the equation lacks is tolerated when it is zero
            bool absent = false;
            std::string unknown;
            if (key != "eta") {
                for (std::size_t i = 0; i < independents.size(); ++i)
                    if (key == "xi_" + independents[i].text()) slot = i;
                if (slot == independents.size()) {
                    std::string allowed;
                    for (auto& v : independents) allowed += "xi_" + v.text() + ", ";
                    unknown = "unknown generator field '" + key + "'; expected " + allowed + "eta";
                    if (key != "xi_t" && key != "xi_x" && key != "xi_y" && key != "xi_r")
                        throw ParseError(unknown, line, col);
                    absent = true;
                }
            }
            if (!absent) {
                if (seen[slot]) throw ParseError("generator field '" + key + "' given twice", line, col);
                seen[slot] = true;
            }
            std::size_t value_offset = start + eq + 1;
            Expression value;
            try {
                value = parse(field.substr(eq + 1), options);
            } catch (const ParseError& e) {
                auto [vl, vc] = position(value_offset);
                int l = vl + e.line() - 1;
                int c = e.line() == 1 ? vc + e.column() - 1 : e.column();
                std::string msg = e.what();
                msg = msg.substr(msg.find(": ") + 2);
                throw ParseError(msg, l, c);
            }
            if (absent) {
                if (!value.is_zero()) throw ParseError(unknown, line, col);
            } else if (slot == independents.size())
                eta = value;
            else
                xi[slot] = value;
        }
        start = end + 1;
    }
    return VectorField(independents, dependent, std::move(xi), eta);
}

VectorField parse_generator(std::string_view text, const EvolutionPDE& pde, const ParseOptions& options) {
    return parse_generator(text, pde.independents(), pde.dependent(), options);
}

} // namespace liesym
