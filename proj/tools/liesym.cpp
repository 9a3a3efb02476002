// liesym: verify, find, reduce, classify and report from the command line.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage error.

#include "liesym/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace liesym;
using namespace liesym::report;

namespace {

struct Options {
    RunConfig cfg;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* sub, Options& o, bool with_generator, bool with_fixture) {
    sub->add_option("--equation", o.cfg.equation, "registry name (hpz, heat, reduced-3.2, ...)");
    sub->add_option("--params", o.cfg.params, "binding such as R=5,S=4,V=1,W=1");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write the report to this file");
    if (with_generator)
        sub->add_option("--generator", o.cfg.generators, "generator text \"xi_t=...; xi_x=...; eta=...\" or a name");
    if (with_fixture) sub->add_option("--fixture", o.cfg.fixture, "hpz, hpz-literal or a JSON basis file");
}

int emit(const Options& o, const Result& r) {
    std::string body = o.format == "json" ? r.json.dump(2) + "\n" : r.text;
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write '" << o.out << "'\n";
            return 2;
        }
        f << body;
    }
    return static_cast<int>(r.outcome);
}

int fail(const Options& o, Outcome outcome, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    if (o.format == "json") {
        Json j{{"error", message}, {"exit_code", static_cast<int>(outcome)}};
        std::cout << j.dump(2) << "\n";
    }
    return static_cast<int>(outcome);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie point symmetries of (1+2) evolution equations"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "check that generators are symmetries");
    add_common(verify, o, true, true);

    auto* find = app.add_subcommand("find", "solve the determining equations");
    add_common(find, o, false, false);
    int degree_cap = -1;
    find->add_option("--degree-cap", degree_cap, "polynomial degree of the e^{lambda t} trial functions");

    auto* reduce = app.add_subcommand("reduce", "reduce by delta3..delta6, time, or an inline generator");
    add_common(reduce, o, true, false);

    auto* classify_cmd = app.add_subcommand("classify", "structure constants and classification");
    add_common(classify_cmd, o, false, true);
    classify_cmd->add_option("--basis", o.cfg.basis, "JSON basis file");

    auto* report_cmd = app.add_subcommand("report", "full pipeline as one document");
    add_common(report_cmd, o, false, false);
    report_cmd->add_option("--degree-cap", degree_cap, "polynomial degree of the e^{lambda t} trial functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (degree_cap >= 0) o.cfg.degree_cap = degree_cap;

    try {
        if (verify->parsed()) return emit(o, run_verify(o.cfg));
        if (find->parsed()) return emit(o, run_find(o.cfg));
        if (reduce->parsed()) return emit(o, run_reduce(o.cfg));
        if (classify_cmd->parsed()) return emit(o, run_classify(o.cfg));
        if (report_cmd->parsed()) return emit(o, run_report(o.cfg));
    } catch (const ParseError& e) {
        return fail(o, Outcome::UsageError, std::string("parse error at ") + e.what());
    } catch (const std::exception& e) {
        return fail(o, classify_exception(e), e.what());
    }
    return 2;
}
