#include "liesym/prolongation.hpp"

#include <stdexcept>

namespace liesym {

const VectorField& SymmetryFixture::operator[](const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return generators[i];
    throw std::invalid_argument("no generator named '" + name + "'");
}

SymmetryFixture hpz_fixture(C1Reading reading) {
    std::map<std::string, Expression> c;
    c["A1"] = parse("-1/2*(R + omega)*exp(-1/2*(R + omega)*t)");
    c["A2"] = parse("exp(-1/2*(R + omega)*t)");
    c["B1"] = parse("1/2*(-R + omega)*exp(1/2*(-R + omega)*t)");
    c["B2"] = parse("exp(1/2*(-R + omega)*t)");
    c["C"] = parse("1/(2*(R*V + W))*exp(-1/2*(-R + omega)*t)");
    c["C1"] = parse(reading == C1Reading::Product ? "(R - omega)*W" : "R - omega*W");
    c["C2"] = parse("2*(R*V + W)");
    c["C3"] = parse("R*(-R + omega)");
    c["C4"] = parse("-2*R*S");
    c["E"] = parse("1/(2*(R*V + W))*exp(1/2*(R + omega)*t)");
    c["E1"] = parse(reading == C1Reading::Product ? "(R + omega)*W" : "R + omega*W");
    c["E2"] = parse("2*(R*V + W)");
    c["E3"] = parse("R*(-R - omega)");
    c["E4"] = parse("-2*R*S");

    const std::vector<Symbol> vars{sym::t(), sym::x(), sym::y()};
    const Expression u(sym::u()), x(sym::x()), y(sym::y());
    auto field = [&](Expression xt, Expression xx, Expression xy, Expression eta) {
        return VectorField(vars, sym::u(), {xt, xx, xy}, eta);
    };
    SymmetryFixture f;
    f.coefficients = c;
    f.names = {"delta1", "delta2", "delta3", "delta4", "delta5", "delta6"};
    f.generators = {
        field(1, 0, 0, u),
        field(0, 0, 0, u),
        field(0, c["A1"], c["A2"], 0),
        field(0, c["B1"], c["B2"], 0),
        field(0, c["C"] * c["C1"], c["C"] * c["C2"], c["C"] * (c["C3"] * x + c["C4"] * y) * u),
        field(0, c["E"] * c["E1"], c["E"] * c["E2"], c["E"] * (c["E3"] * x + c["E4"] * y) * u),
    };
    return f;
}

} // namespace liesym
