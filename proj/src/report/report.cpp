#include "liesym/report.hpp"

#include <fstream>
#include <sstream>

namespace liesym::report {

namespace {

const char* kDefaultParams = "R=5,S=4,V=1,W=1";
const char* kExcluded =
    "solution symmetries phi*d_u, with phi any solution of the equation, form an infinite-dimensional abelian "
    "ideal and are not counted";

const std::vector<std::string> kW5{"delta2", "delta3", "delta4", "delta5", "delta6"};

ParameterBinding binding_of(const std::string& text) {
    try {
        ParameterBinding b = text.empty() ? ParameterBinding{} : ParameterBinding::parse(text);
        b.validate();
        return b;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--params: ") + e.what());
    }
}

const EquationEntry& entry_of(const std::string& name) {
    try {
        return equation_entry(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

EvolutionPDE evolution_of(const std::string& name) {
    const EquationEntry& e = entry_of(name);
    if (!e.evolution) throw UsageError("'" + name + "' is a stationary equation; an evolution equation is needed");
    return *e.evolution;
}

std::string str(const Expression& e) { return render(e); }

std::string rational_str(const Rational& q) { return to_string(q); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json binding_json(const ParameterBinding& b) {
    if (b.empty()) return nullptr;
    return b.str();
}

std::vector<VectorField> bind_all(const std::vector<VectorField>& fields, const ParameterBinding& b) {
    std::vector<VectorField> out;
    for (auto& f : fields) out.push_back(b.empty() ? f : f.bind(b));
    return out;
}

std::vector<VectorField> select(const LoadedBasis& basis, const std::vector<std::string>& names) {
    std::vector<VectorField> out;
    for (auto& n : names)
        for (std::size_t i = 0; i < basis.names.size(); ++i)
            if (basis.names[i] == n) out.push_back(basis.fields[i]);
    return out;
}

} // namespace

// --- basis files --------------------------------------------------------------

LoadedBasis load_basis(const Json& doc) {
    LoadedBasis out;
    try {
        out.description = doc.value("description", "");
        if (doc.contains("brackets")) {
            for (auto& n : doc.at("basis")) out.names.push_back(n.get<std::string>());
            const std::size_t n = out.names.size();
            auto index = [&](const std::string& name) {
                for (std::size_t i = 0; i < n; ++i)
                    if (out.names[i] == name) return i;
                throw UsageError("bracket refers to unknown basis element '" + name + "'");
            };
            std::vector<std::vector<Coords>> c(n, std::vector<Coords>(n, Coords(n, Expression(0))));
            for (auto& br : doc.at("brackets")) {
                std::size_t i = index(br.at("left")), j = index(br.at("right"));
                if (i == j) throw UsageError("bracket of '" + out.names[i] + "' with itself");
                for (auto& [k, v] : br.at("value").items()) {
                    Expression coef = parse(v.is_string() ? v.get<std::string>() : v.dump());
                    if (!coef.is_coefficient()) throw UsageError("bracket coefficient " + render(coef) + " is not constant");
                    c[i][j][index(k)] += coef;
                    c[j][i][index(k)] -= coef;
                }
            }
            out.abstract = LieAlgebra::from_tensor(out.names, std::move(c));
            return out;
        }
        std::vector<Symbol> independents{sym::t(), sym::x(), sym::y()};
        Symbol dependent = sym::u();
        if (doc.contains("variables")) {
            independents.clear();
            for (auto& v : doc.at("variables").at("independents")) {
                Expression e = parse(v.get<std::string>());
                if (e.kind() != ExprKind::Atom || !e.symbol().is_independent())
                    throw UsageError("'" + v.get<std::string>() + "' is not an independent variable");
                independents.push_back(e.symbol());
            }
            Expression d = parse(doc.at("variables").at("dependent").get<std::string>());
            if (d.kind() != ExprKind::Atom || !d.symbol().is_dependent()) throw UsageError("bad dependent variable");
            dependent = d.symbol();
        }
        ParseOptions opts;
        if (doc.contains("constants"))
            for (auto& c : doc.at("constants")) opts.constants.push_back(c.get<std::string>());
        for (auto& g : doc.at("generators")) {
            out.names.push_back(g.at("name").get<std::string>());
            out.fields.push_back(parse_generator(g.at("field").get<std::string>(), independents, dependent, opts));
        }
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed basis document: ") + e.what());
    }
    if (out.names.empty()) throw UsageError("basis document lists no generators");
    return out;
}

LoadedBasis load_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
    return load_basis(doc);
}

Json basis_document(const std::vector<std::string>& names, const std::vector<VectorField>& fields,
                    const std::string& description) {
    Json doc;
    doc["description"] = description;
    Json vars;
    vars["independents"] = Json::array();
    for (auto& s : fields.at(0).independents()) vars["independents"].push_back(s.text());
    vars["dependent"] = fields.at(0).dependent().text();
    doc["variables"] = vars;
    doc["generators"] = Json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
        doc["generators"].push_back(Json{{"name", names[i]}, {"field", fields[i].str()}});
    return doc;
}

LoadedBasis hpz_basis(C1Reading reading) {
    SymmetryFixture f = hpz_fixture(reading);
    LoadedBasis out;
    out.names = f.names;
    out.fields = f.generators;
    out.description = reading == C1Reading::Product ? "hpz symmetry fixture, C1 = (R - omega)*W, E1 = (R + omega)*W"
                                                    : "hpz symmetry fixture, C1 = R - omega*W, E1 = R + omega*W";
    return out;
}

// --- JSON pieces ---------------------------------------------------------------

Json profile_json(const SymmetryProfile& p) {
    Json j;
    j["a_order"] = p.a_order;
    j["b_order"] = p.b_order;
    j["f_order"] = p.f_order;
    j["with_time_part"] = p.with_time_part;
    j["without_time_part"] = p.without_time_part;
    j["all_shapes_hold"] = p.all_shapes_hold();
    j["generators"] = Json::array();
    for (auto& g : p.generators)
        j["generators"].push_back(Json{{"a", str(g.a)},
                                       {"b", str(g.b)},
                                       {"f", str(g.f)},
                                       {"F", str(g.F)},
                                       {"shape_holds", g.shape_holds()}});
    return j;
}

Json basis_json(const SymmetryBasis& b) {
    Json j;
    j["equation"] = b.equation;
    j["binding"] = binding_json(b.binding);
    j["dimension"] = b.dimension();
    j["operator_degree"] = b.operator_degree;
    j["exponents"] = Json::array();
    for (auto& [l, m] : b.exponent_multiplicities)
        j["exponents"].push_back(Json{{"lambda", rational_str(l)}, {"multiplicity", m}});
    j["generators"] = Json::array();
    j["residual_checks"] = Json::array();
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
        const VectorField& g = b.generators[i];
        Json gj{{"name", "X" + std::to_string(i + 1)}};
        for (auto& v : g.independents()) gj["xi_" + v.text()] = str(g.xi(v));
        gj["eta"] = str(g.eta());
        gj["field"] = g.str();
        gj["lambda"] = rational_str(b.exponents.at(i));
        gj["residual_zero"] = static_cast<bool>(b.residual_checks.at(i));
        j["generators"].push_back(std::move(gj));
        j["residual_checks"].push_back(static_cast<bool>(b.residual_checks.at(i)));
    }
    j["notes"] = b.notes;
    j["excluded"] = kExcluded;
    return j;
}

Json verdict_json(const Verdict& v, const LieAlgebra& L) {
    auto combos = [&](const std::vector<Coords>& vs) {
        Json a = Json::array();
        for (auto& c : vs) a.push_back(L.combination(c));
        return a;
    };
    Json j;
    j["dimension"] = v.dimension;
    j["center_dim"] = v.center_dim;
    j["derived_dim"] = v.derived_dim;
    j["name"] = v.name;
    j["mubarakzyanov_label"] = v.mubarakzyanov_label.empty() ? Json(nullptr) : Json(v.mubarakzyanov_label);
    j["ideal_basis"] = combos(v.ideal_basis);
    j["complement_basis"] = combos(v.complement_basis);
    Json sc = Json::array();
    for (std::size_t i = 0; i < L.dimension(); ++i)
        for (std::size_t k = i + 1; k < L.dimension(); ++k) {
            Coords br = L.bracket(L.unit(i), L.unit(k));
            bool zero = true;
            for (auto& e : br) zero = zero && e.is_zero();
            if (!zero) sc.push_back(Json{{"left", L.names()[i]}, {"right", L.names()[k]}, {"value", L.combination(br)}});
        }
    j["structure_constants"] = sc;
    j["summary"] = v.summary();
    j["description"] = v.description;
    j["basis"] = L.names();
    if (!L.fields().empty()) {
        Json f = Json::array();
        for (std::size_t i = 0; i < L.dimension(); ++i) f.push_back(Json{{"name", L.names()[i]}, {"field", L.fields()[i].str()}});
        j["fields"] = f;
    }
    j["closure"] = L.closure_mode();
    j["center"] = combos(v.center);
    j["derived_algebra"] = combos(v.derived);
    j["derived_series"] = v.derived_series;
    j["lower_central_series"] = v.lower_central_series;
    j["ideal_name"] = v.ideal_name.empty() ? Json(nullptr) : Json(v.ideal_name);
    j["complement_name"] = v.complement_name.empty() ? Json(nullptr) : Json(v.complement_name);
    j["killing_signature"] = v.killing_signature ? Json(*v.killing_signature) : Json(nullptr);
    j["note"] = v.note.empty() ? Json(nullptr) : Json(v.note);
    return j;
}

std::string verdict_text(const Verdict& v, const LieAlgebra& L) {
    std::ostringstream os;
    os << v.summary() << "\n";
    if (!v.mubarakzyanov_label.empty()) os << "  label: " << v.mubarakzyanov_label << "\n";
    os << "  basis: ";
    for (std::size_t i = 0; i < L.dimension(); ++i) os << (i ? ", " : "") << L.names()[i];
    os << "\n  center (dim " << v.center_dim << "):";
    for (auto& c : v.center) os << " " << L.combination(c) << ";";
    os << "\n  derived algebra (dim " << v.derived_dim << "):";
    for (auto& c : v.derived) os << " " << L.combination(c) << ";";
    os << "\n";
    if (!v.ideal_basis.empty()) {
        os << "  ideal " << v.ideal_name << ":";
        for (auto& c : v.ideal_basis) os << " " << L.combination(c) << ";";
        os << "\n  complement " << v.complement_name << ":";
        for (auto& c : v.complement_basis) os << " " << L.combination(c) << ";";
        os << "\n";
    }
    if (!v.note.empty()) os << "  note: " << v.note << "\n";
    if (L.closure_mode() != "symbolic") os << "  closure: " << L.closure_mode() << "\n";
    return os.str();
}

Outcome classify_exception(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e))
        return Outcome::UsageError;
    return Outcome::MathFailure;
}

// --- verify ---------------------------------------------------------------------

Result run_verify(const RunConfig& cfg) {
    EvolutionPDE pde = evolution_of(cfg.equation);
    ParameterBinding b = binding_of(cfg.params);
    LoadedBasis basis;
    if (!cfg.fixture.empty()) {
        if (cfg.fixture == "hpz" || cfg.fixture == "hpz-literal") {
            if (cfg.equation != "hpz") throw UsageError("fixture '" + cfg.fixture + "' belongs to --equation hpz");
            basis = hpz_basis(cfg.fixture == "hpz" ? C1Reading::Product : C1Reading::Literal);
        } else {
            basis = load_basis_file(cfg.fixture);
        }
    }
    for (std::size_t i = 0; i < cfg.generators.size(); ++i) {
        basis.names.push_back(cfg.generators.size() == 1 && basis.fields.empty() ? "generator"
                                                                                 : "generator" + std::to_string(i + 1));
        basis.fields.push_back(parse_generator(cfg.generators[i], pde));
    }
    if (basis.fields.empty()) throw UsageError("verify needs --generator or --fixture");
    if (!b.empty()) pde = pde.bind(b);

    Result r;
    Json gens = Json::array();
    std::ostringstream os;
    os << "equation: " << cfg.equation << "  " << pde.str() << "\n";
    if (!b.empty()) os << "binding: " << b.str() << "\n";
    if (!basis.description.empty()) os << "fixture: " << basis.description << "\n";
    bool all_zero = true;
    for (std::size_t i = 0; i < basis.fields.size(); ++i) {
        VectorField f = b.empty() ? basis.fields[i] : basis.fields[i].bind(b);
        if (f.independents() != pde.independents() || f.dependent() != pde.dependent())
            throw UsageError("generator " + basis.names[i] + " uses other variables than the equation");
        Expression res = residual(f, pde);
        all_zero = all_zero && res.is_zero();
        gens.push_back(Json{{"name", basis.names[i]}, {"field", f.str()}, {"residual", str(res)}, {"zero", res.is_zero()}});
        os << basis.names[i] << ": " << f.str() << "\n  residual: " << str(res) << "\n";
    }
    os << "all residuals zero: " << yes_no(all_zero) << "\n";
    r.json["command"] = "verify";
    r.json["equation"] = cfg.equation;
    r.json["pde"] = pde.str();
    r.json["binding"] = binding_json(b);
    r.json["fixture"] = basis.description.empty() ? Json(nullptr) : Json(basis.description);
    r.json["generators"] = gens;
    r.json["all_zero"] = all_zero;
    if (cfg.fixture == "hpz" && b.empty()) {
        // the other parenthesization of C1/E1, for the record
        LoadedBasis lit = hpz_basis(C1Reading::Literal);
        Json alt = Json::array();
        os << "other C1/E1 reading (C1 = R - omega*W, E1 = R + omega*W):";
        for (std::size_t i = 0; i < lit.fields.size(); ++i) {
            bool z = residual(lit.fields[i], pde).is_zero();
            alt.push_back(Json{{"name", lit.names[i]}, {"zero", z}});
            os << " " << lit.names[i] << (z ? " zero" : " NONZERO") << ";";
        }
        os << "\n";
        r.json["literal_reading"] = alt;
    }
    r.text = os.str();
    r.outcome = all_zero ? Outcome::Success : Outcome::MathFailure;
    return r;
}

// --- find -----------------------------------------------------------------------

namespace {

std::string exponents_text(const SymmetryBasis& b) {
    std::string s;
    for (auto& [l, m] : b.exponent_multiplicities) {
        if (!s.empty()) s += ", ";
        s += rational_str(l);
        if (m > 1) s += " (x" + std::to_string(m) + ")";
    }
    return s;
}

std::string profile_text(const SymmetryProfile& p) {
    std::ostringstream os;
    os << "profile:\n  a order " << p.a_order << ", b order " << p.b_order << ", f order " << p.f_order
       << "\n  generators with time part " << p.with_time_part << ", without " << p.without_time_part
       << "\n  xi_t = a(t) and spatial part minus a'(t)*s/2 free of s for every generator: " << yes_no(p.all_shapes_hold()) << "\n";
    return os.str();
}

struct FindRun {
    SymmetryBasis basis;
    std::optional<SymmetryProfile> profile;
    std::optional<Json> fixture_span;
};

FindRun find_symmetries(const std::string& equation, const ParameterBinding& b, std::optional<int> degree_cap) {
    EvolutionPDE pde = evolution_of(equation);
    Ansatz ansatz;
    if (degree_cap) {
        if (*degree_cap < 0) throw UsageError("--degree-cap must be non-negative");
        ansatz.trial_degree = *degree_cap;
    }
    FindRun run;
    run.basis = solve_determining(pde, ansatz, b);
    if (pde.spatial().size() == 1) run.profile = profile_basis(run.basis);
    if (equation == "hpz") {
        std::vector<VectorField> fixture = bind_all(hpz_fixture().generators, b);
        std::vector<VectorField> both = run.basis.generators;
        both.insert(both.end(), fixture.begin(), fixture.end());
        std::size_t rs = span_rank(run.basis.generators), rf = span_rank(fixture), rb = span_rank(both);
        run.fixture_span = Json{{"rank_found", rs}, {"rank_fixture", rf}, {"rank_stacked", rb}, {"equal", rs == rf && rf == rb}};
    }
    return run;
}

} // namespace

Result run_find(const RunConfig& cfg) {
    ParameterBinding b = binding_of(cfg.params);
    if (b.empty() && cfg.equation != "heat") b = binding_of(kDefaultParams);
    FindRun run = find_symmetries(cfg.equation, b, cfg.degree_cap);
    Result r;
    r.json["command"] = "find";
    r.json["basis"] = basis_json(run.basis);
    r.json["profile"] = run.profile ? profile_json(*run.profile) : Json(nullptr);
    r.json["fixture_span"] = run.fixture_span ? *run.fixture_span : Json(nullptr);
    std::ostringstream os;
    os << "equation: " << cfg.equation << "  " << evolution_of(cfg.equation).str() << "\n";
    if (!b.empty()) os << "binding: " << b.str() << "\n";
    os << "dimension: " << run.basis.dimension() << "\n";
    os << "exponents: " << exponents_text(run.basis) << "\n";
    for (std::size_t i = 0; i < run.basis.generators.size(); ++i)
        os << "  X" << i + 1 << ": " << run.basis.generators[i].str() << "\n";
    if (run.profile) os << profile_text(*run.profile);
    if (run.fixture_span)
        os << "span equals the delta1..delta6 fixture at this binding: " << yes_no((*run.fixture_span)["equal"].get<bool>())
           << "\n";
    for (auto& n : run.basis.notes) os << "note: " << n << "\n";
    os << "excluded: " << kExcluded << "\n";
    r.text = os.str();
    return r;
}

// --- reduce ---------------------------------------------------------------------

namespace {

bool is_delta_name(const std::string& g) {
    return g == "delta3" || g == "delta4" || g == "delta5" || g == "delta6";
}

Json reduce_json_and_text(const std::string& name, const ReductionMap& map, const ReducedEquation& red,
                          const ParameterBinding& b, std::ostringstream& os) {
    auto bound = [&](const Expression& e) { return b.empty() ? e : b.apply(e); };
    Json j;
    j["generator"] = name;
    j["field"] = map.generator.str();
    j["invariant"] = str(bound(map.invariant()));
    j["multiplier_exponent"] = str(bound(map.multiplier_exponent()));
    EvolutionPDE pde = b.empty() ? red.pde : red.pde.bind(b);
    j["reduced_equation"] = pde.str();
    j["equation_form"] = str(bound(red.scaled_form(Expression(1)))) + " = 0";
    j["certificate"] = red.certificate;
    Json consts = Json::object();
    for (auto& [k, v] : map.constants) consts[k] = str(bound(v));
    j["constants"] = consts;
    os << "generator: " << name << "  " << map.generator.str() << "\n";
    os << "invariant: r = " << str(bound(map.invariant())) << "\n";
    os << "multiplier: u = z(t, r)*exp(Q), Q = " << str(bound(map.multiplier_exponent())) << "\n";
    for (auto& [k, v] : map.constants) os << "  " << k << " = " << str(bound(v)) << "\n";
    os << "reduced equation: " << str(bound(red.scaled_form(Expression(1)))) << " = 0\n";
    os << "certificate: " << red.certificate << "\n";
    return j;
}

Json comparison_json(const ReducedEquation& red, const EquationEntry& entry, const ParameterBinding& b,
                     std::ostringstream& os) {
    Json terms = Json::array();
    bool all = true;
    os << "comparison with " << entry.name << " (overall factor " << str(entry.printed_factor) << "):\n";
    for (const TermComparison& tc : compare_with_transcription(red, entry)) {
        Expression d = b.empty() ? tc.derived : b.apply(tc.derived);
        Expression p = b.empty() ? tc.printed : b.apply(tc.printed);
        bool match = b.empty() ? tc.match : d == p;
        all = all && match;
        terms.push_back(Json{{"jet", tc.jet.text()}, {"derived", str(d)}, {"transcribed", str(p)}, {"match", match}});
        os << "  " << tc.jet.text() << ": derived " << str(d) << " | transcribed " << str(p) << " | "
           << (match ? "match" : "MISMATCH (suspected transcription slip)") << "\n";
    }
    os << "  verdict: " << (all ? "agrees term by term" : "differs; derived coefficients shown above") << "\n";
    return Json{{"name", entry.name},
                {"factor", str(entry.printed_factor)},
                {"terms", terms},
                {"match", all},
                {"transcribed_equation", str(entry.printed_factor * (entry.evolution->rhs() - Expression(entry.evolution->time_jet()))) + " = 0"}};
}

Json time_reduction(const EvolutionPDE& pde, const std::string& equation, const ParameterBinding& b, std::ostringstream& os) {
    StationaryEquation st = reduce_time(pde);
    Expression rate = partial(pde.rhs(), pde.dependent());
    Expression lhs = b.empty() ? st.lhs : b.apply(st.lhs);
    Json j;
    j["generator"] = "time";
    j["field"] = "xi_t=2; eta=" + str(rate * Expression(pde.dependent()));
    j["substitution"] = "u = exp(" + str(rate * Expression(sym::t()) / 2) + ")*z(x, y)";
    j["reduced_equation"] = str(lhs) + " = 0";
    os << "generator: time  2*d_t + " << str(rate) << "*u*d_u\n";
    os << "substitution: u = exp(" << str(rate * Expression(sym::t()) / 2) << ")*z(x, y)\n";
    os << "reduced equation: " << str(lhs) << " = 0\n";
    if (equation == "hpz") {
        const EquationEntry& e = entry_of("stationary-2.6");
        Expression printed = b.empty() ? e.stationary->lhs : b.apply(e.stationary->lhs);
        bool match = printed == lhs;
        j["comparison"] = Json{{"name", e.name}, {"transcribed", str(printed) + " = 0"}, {"match", match}};
        os << "comparison with " << e.name << ": " << (match ? "match" : "MISMATCH") << "\n";
    }
    return j;
}

} // namespace

Result run_reduce(const RunConfig& cfg) {
    if (cfg.generators.size() != 1) throw UsageError("reduce needs exactly one --generator");
    const std::string& g = cfg.generators[0];
    EvolutionPDE pde = evolution_of(cfg.equation);
    ParameterBinding b = binding_of(cfg.params);
    Result r;
    std::ostringstream os;
    os << "equation: " << cfg.equation << "  " << pde.str() << "\n";
    if (!b.empty()) os << "binding: " << b.str() << "\n";
    if (g == "time") {
        r.json = time_reduction(pde, cfg.equation, b, os);
    } else if (is_delta_name(g)) {
        if (cfg.equation != "hpz") throw UsageError("generator '" + g + "' belongs to --equation hpz");
        if (!b.empty()) check_reduction_binding(b);
        ReductionMap map = fixture_map(hpz_fixture(), g);
        ReducedEquation red = reduce(pde, map);
        r.json = reduce_json_and_text(g, map, red, b, os);
        r.json["comparison"] = comparison_json(red, entry_of(printed_reduction(g).reduced_equation), b, os);
    } else if (g == "delta1" || g == "delta2") {
        if (cfg.equation != "hpz") throw UsageError("generator '" + g + "' belongs to --equation hpz");
        invariants_for(hpz_fixture()[g]); // throws: no t-free spatial invariant
        throw UsageError("generator '" + g + "' has no reduction here");
    } else {
        VectorField f = parse_generator(g, pde);
        ReductionMap map = invariants_for(f);
        ReducedEquation red = reduce(pde, map);
        r.json = reduce_json_and_text("generator", map, red, b, os);
    }
    Json out;
    out["command"] = "reduce";
    out["equation"] = cfg.equation;
    out["binding"] = binding_json(b);
    for (auto& [k, v] : r.json.items()) out[k] = v;
    r.json = out;
    r.text = os.str();
    return r;
}

// --- classify -------------------------------------------------------------------

Result run_classify(const RunConfig& cfg) {
    ParameterBinding b = binding_of(cfg.params);
    LieAlgebra L;
    std::string source;
    if (!cfg.basis.empty()) {
        LoadedBasis basis = load_basis_file(cfg.basis);
        source = cfg.basis;
        if (basis.abstract)
            L = *basis.abstract;
        else
            L = structure_constants(bind_all(basis.fields, b), basis.names,
                                    b.empty() ? std::nullopt : std::optional<ParameterBinding>(b));
    } else if (cfg.fixture == "hpz") {
        LoadedBasis basis = hpz_basis(C1Reading::Product);
        source = "hpz fixture";
        L = structure_constants(bind_all(basis.fields, b), basis.names);
    } else {
        if (b.empty() && cfg.equation != "heat") b = binding_of(kDefaultParams);
        SymmetryBasis sb = solve_determining(evolution_of(cfg.equation), Ansatz{}, b);
        source = "symmetries of " + cfg.equation;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < sb.generators.size(); ++i) names.push_back("X" + std::to_string(i + 1));
        L = structure_constants(sb.generators, names);
    }
    Verdict v = classify(L);
    Result r;
    r.json["command"] = "classify";
    r.json["source"] = source;
    r.json["binding"] = binding_json(b);
    const Json vj = verdict_json(v, L);
    for (auto& [k, val] : vj.items()) r.json[k] = val;
    r.text = verdict_text(v, L);
    r.outcome = v.classified() ? Outcome::Success : Outcome::MathFailure;
    return r;
}

// --- report ---------------------------------------------------------------------

Result run_report(const RunConfig& cfg) {
    const std::string params = cfg.params.empty() ? kDefaultParams : cfg.params;
    const ParameterBinding b = binding_of(params);
    Json doc;
    std::ostringstream os;
    doc["document"] = "liesym report for the hpz equation";
    doc["equation"] = make_hpz().str();
    doc["binding"] = b.str();
    os << "# liesym report: hpz\n\n" << make_hpz().str() << "\n\n";

    os << "## Symmetry fixture\n\n";
    RunConfig vc;
    vc.fixture = "hpz";
    Result verify = run_verify(vc);
    doc["verification"] = verify.json;
    os << verify.text << "\n";

    os << "## Symmetry discovery at " << b.str() << "\n\n";
    RunConfig fc;
    fc.params = params;
    fc.degree_cap = cfg.degree_cap;
    Result find = run_find(fc);
    doc["discovery"] = find.json;
    os << find.text << "\n";

    os << "## Reductions\n\n";
    Json reds = Json::array();
    for (const char* g : {"delta3", "delta4", "delta5", "delta6", "time"}) {
        RunConfig rc;
        rc.generators = {g};
        Result red = run_reduce(rc);
        reds.push_back(red.json);
        os << red.text << "\n";
    }
    doc["reductions"] = reds;

    os << "## Symmetries of the reduced equations at " << b.str() << "\n\n";
    Json maximal = Json::array();
    for (const char* e : {"reduced-3.2", "reduced-3.5", "reduced-3.7", "reduced-3.9", "heat"}) {
        FindRun run = find_symmetries(e, std::string(e) == "heat" ? ParameterBinding{} : b, cfg.degree_cap);
        maximal.push_back(Json{{"equation", e},
                               {"dimension", run.basis.dimension()},
                               {"exponents", basis_json(run.basis)["exponents"]},
                               {"profile", run.profile ? profile_json(*run.profile) : Json(nullptr)}});
        os << e << ": dimension " << run.basis.dimension() << ", exponents " << exponents_text(run.basis) << "\n";
        if (run.profile) os << profile_text(*run.profile);
    }
    doc["reduced_symmetries"] = maximal;
    os << "\n## Algebras\n\n";
    Json algebras = Json::array();
    {
        LoadedBasis basis = hpz_basis(C1Reading::Product);
        LieAlgebra W = structure_constants(select(basis, kW5), kW5);
        Verdict vw = classify(W);
        algebras.push_back(Json{{"source", "delta2..delta6"}, {"verdict", verdict_json(vw, W)}});
        os << "delta2..delta6: " << verdict_text(vw, W);
        LieAlgebra F = structure_constants(basis.fields, basis.names);
        Verdict vf = classify(F);
        algebras.push_back(Json{{"source", "delta1..delta6"}, {"verdict", verdict_json(vf, F)}});
        os << "delta1..delta6: " << verdict_text(vf, F);
        RunConfig cc;
        cc.equation = "reduced-3.2";
        cc.params = params;
        Result rc = run_classify(cc);
        algebras.push_back(Json{{"source", "symmetries of reduced-3.2"}, {"verdict", rc.json}});
        os << "reduced-3.2: " << rc.text;
    }
    doc["algebras"] = algebras;
    doc["excluded"] = kExcluded;
    os << "\nexcluded: " << kExcluded << "\n";
    Result r;
    r.json = doc;
    r.text = os.str();
    bool ok = verify.outcome == Outcome::Success;
    for (auto& a : algebras) ok = ok && a["verdict"]["name"] != "unclassified";
    r.outcome = ok ? Outcome::Success : Outcome::MathFailure;
    return r;
}

} // namespace liesym::report
