#pragma once

#include "liesym/lie_algebra.hpp"
#include "liesym/reduction.hpp"
#include "liesym/solver.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesym::report {

using Json = nlohmann::ordered_json;

/// Bad input: unknown names, malformed files, invalid bindings. Exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Outcome { Success = 0, MathFailure = 1, UsageError = 2 };

struct Result {
    Json json;
    std::string text;
    Outcome outcome = Outcome::Success;
};

struct RunConfig {
    std::string equation = "hpz";
    /// Inline generator texts for verify; a name (delta3..delta6, time) or
    /// inline text for reduce.
    std::vector<std::string> generators;
    /// "hpz", "hpz-literal" or a JSON basis file.
    std::string fixture;
    /// JSON basis file for classify.
    std::string basis;
    std::string params;
    std::optional<int> degree_cap;
};

/// Generators loaded from a basis file, or an abstract algebra.
struct LoadedBasis {
    std::vector<std::string> names;
    std::vector<VectorField> fields;
    std::optional<LieAlgebra> abstract;
    std::string description;
};

/// {"description", "variables": {"independents", "dependent"}, "constants",
///  "generators": [{"name", "field"}]} or {"basis": [...], "brackets":
///  [{"left", "right", "value": {name: coefficient}}]}.
LoadedBasis load_basis(const Json& doc);
LoadedBasis load_basis_file(const std::string& path);
Json basis_document(const std::vector<std::string>& names, const std::vector<VectorField>& fields,
                    const std::string& description);

/// The delta1..delta6 fixture in either C1/E1 reading.
LoadedBasis hpz_basis(C1Reading reading);

Result run_verify(const RunConfig& cfg);
Result run_find(const RunConfig& cfg);
Result run_reduce(const RunConfig& cfg);
Result run_classify(const RunConfig& cfg);
/// verify -> find -> reduce x4 and time -> classify x3 in one document.
Result run_report(const RunConfig& cfg);

Json basis_json(const SymmetryBasis& basis);
Json profile_json(const SymmetryProfile& profile);
Json verdict_json(const Verdict& v, const LieAlgebra& L);
std::string verdict_text(const Verdict& v, const LieAlgebra& L);

/// Maps an exception to the exit-code contract.
Outcome classify_exception(const std::exception& e);

} // namespace liesym::report
