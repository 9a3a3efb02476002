#include "liesym/pde.hpp"

#include <stdexcept>

namespace liesym {

namespace {

EquationEntry evolution(std::string name, std::string description, std::vector<Symbol> vars, Symbol dep,
                        const char* rhs, const char* factor = "1") {
    EquationEntry e;
    e.name = name;
    e.description = std::move(description);
    e.printed_factor = parse(factor);
    e.evolution = EvolutionPDE(std::move(vars), std::move(dep), parse(rhs) / e.printed_factor, std::move(name));
    return e;
}

std::vector<EquationEntry> build() {
    const std::vector<Symbol> tr{sym::t(), sym::r()};
    std::vector<EquationEntry> out;
    out.push_back({"hpz", "constant-coefficient HPZ equation in (t, x, y)", make_hpz(), std::nullopt, Expression(1)});
    out.push_back({"heat", "classical heat equation u_t = u_xx", make_heat(), std::nullopt, Expression(1)});
    out.push_back(evolution("reduced-3.2", "hpz reduced along the invariants of delta3 (transcribed form)", tr,
                            sym::z(), "R*z + 1/2*(R - omega)*r*z_r + 2*(V*(R + omega) + 2*W)*z_rr"));
    out.push_back(evolution("reduced-3.5", "hpz reduced along the invariants of delta4 (transcribed form)", tr,
                            sym::z(), "R*z + 1/2*(R + omega)*r*z_r + 2*(V*(R - omega) + 2*W)*z_rr"));
    out.push_back(evolution("reduced-3.7", "hpz reduced along the invariants of delta5 (transcribed form)", tr,
                            sym::z(),
                            "R*(r^2*(R - omega) + V*(R + omega) + 2*W)*z + r*(V*(R^2 + R*omega) + W*(3*R - omega))*z_r"
                            " + (V*W*(R + omega) + 2*W^2)*z_rr",
                            "2*(R*V + W)"));
    out.push_back(evolution("reduced-3.9", "hpz reduced along the invariants of delta6 (transcribed form)", tr,
                            sym::z(),
                            "R*(r^2*(R + omega) + V*(R - omega) + 2*W)*z + r*(V*(R^2 - R*omega) + W*(3*R + omega))*z_r"
                            " + (V*W*(R - omega) + 2*W^2)*z_rr",
                            "2*(R*V + W)"));
    EquationEntry st;
    st.name = "stationary-2.6";
    st.description = "time-reduced hpz for u = exp(R*t/2)*z(x, y) (transcribed form)";
    st.stationary = StationaryEquation{{sym::x(), sym::y()}, sym::z(),
                                       parse("1/2*R*z - x*z_y + R*x*z_x + S*y*z_x + V*z_xy + W*z_xx")};
    out.push_back(std::move(st));
    return out;
}

const std::vector<EquationEntry>& registry() {
    static const std::vector<EquationEntry> entries = build();
    return entries;
}

} // namespace

const std::vector<std::string>& equation_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& e : registry()) n.push_back(e.name);
        return n;
    }();
    return names;
}

const EquationEntry& equation_entry(const std::string& name) {
    for (auto& e : registry())
        if (e.name == name) return e;
    std::string known;
    for (auto& n : equation_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown equation '" + name + "'; known equations: " + known);
}

EvolutionPDE equation_by_name(const std::string& name) {
    const EquationEntry& e = equation_entry(name);
    if (!e.evolution) throw std::invalid_argument("equation '" + name + "' is not an evolution equation");
    return *e.evolution;
}

} // namespace liesym
