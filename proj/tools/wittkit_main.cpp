#include "wittkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace wittkit;
using namespace wittkit::cli;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2, Budget = 3 };

int emit(const ScenarioReport& rep, const std::string& json_path) {
    std::cout << rep.to_text();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return Usage;
        }
        out << rep.to_json().dump(2) << "\n";
    }
    return rep.exit_code();
}

void add_common(CLI::App* cmd, ScenarioOptions& o, std::string& json_path) {
    cmd->add_option("--json", json_path, "Write the report as JSON");
    cmd->add_option("--work-budget", o.work_budget, "Largest cochain space or matrix the cohomology solver may build");
    cmd->add_option("--height-bound", o.height_bound, "Height bound for rational reconstruction");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wittkit: exact checks for Galois cohomology, pointed braided categories and fusion rings"};
    app.require_subcommand(1);
    ScenarioOptions o;
    std::string json_path, scenario, target, input, cocycle;

    auto* run = app.add_subcommand("run", "Run a named scenario");
    run->add_option("scenario", scenario, "Scenario name")->required()->check(CLI::IsMember(scenario_names()));
    run->add_option("--input", input, "Input file (action, module, group/category, ring or skeleton)");
    run->add_option("--base", o.base, "Base field, e.g. Q");
    run->add_option("--ext", o.ext, "Extension field, e.g. \"Q(i)\", \"Q(zeta8)\", \"Q(cbrt2)\"");
    run->add_option("--gamma", o.gamma, "Galois group, e.g. C2");
    run->add_option("--coeff", o.coeff, "Coefficients, e.g. mu4:inv");
    run->add_option("--cocycle", cocycle, "Cocycle file");
    run->add_option("--field", o.field, "Field for the center scenario");
    run->add_flag("--check-trivial", o.check_trivial, "Test triviality along the doubling tower");
    run->add_option("--depth", o.depth, "Number of coefficient doublings");
    run->add_option("--tower", o.tower, "Number of doublings above mu_4");
    run->add_option("--max-degree", o.max_degree, "Largest cohomological degree");
    add_common(run, o, json_path);

    auto* verify = app.add_subcommand("verify", "Verify a built-in dataset");
    verify->add_option("target", target, "Dataset")->required()->check(CLI::IsMember({"appendix-a"}));
    verify->add_option("--input", input, "Replace the built-in action with an action file");
    add_common(verify, o, json_path);

    auto* decompose = app.add_subcommand("decompose", "Decompose K ⊗_k K");
    decompose->add_option("--base", o.base, "Base field")->required();
    decompose->add_option("--ext", o.ext, "Extension field")->required();
    add_common(decompose, o, json_path);

    auto* witt = app.add_subcommand("witt-class", "Arithmetic of a degree-4 Witt family class");
    witt->add_option("--gamma", o.gamma, "Galois group, e.g. C2");
    witt->add_option("--coeff", o.coeff, "Coefficients, e.g. mu4:inv");
    witt->add_option("--cocycle", cocycle, "Cocycle file (default: a generator of H^4)");
    witt->add_flag("--check-trivial", o.check_trivial, "Test triviality along the doubling tower");
    witt->add_option("--depth", o.depth, "Number of coefficient doublings");
    add_common(witt, o, json_path);

    auto* grading = app.add_subcommand("grading-check", "Check the Galois grading law on a skeleton");
    grading->add_option("file", input, "Skeleton file")->required();
    add_common(grading, o, json_path);

    auto* parse = app.add_subcommand("parse", "Validate an input file and print it back as JSON");
    parse->add_option("file", input, "Input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*parse) {
            ParsedObject obj = parse_input(input);
            std::cout << Json{{"kind", kind(obj)}, {"object", to_json(obj)}}.dump(2) << "\n";
            return Ok;
        }
        if (*verify) scenario = "appendix-a";
        if (*decompose) scenario = "example-1-6";
        if (*grading) scenario = "grading-check";
        if (*witt) scenario = "witt-family";
        if (!input.empty()) o.input = input;
        if (!cocycle.empty()) o.cocycle = cocycle;
        return emit(run_scenario(scenario, o), json_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return Budget;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return Usage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return Usage;
    }
}
