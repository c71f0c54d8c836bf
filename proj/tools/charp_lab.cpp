#include "charp/errors.hpp"
#include "charp/fixtures.hpp"
#include "charp/groebner.hpp"
#include "charp/scenario.hpp"
#include "charp/selfcheck.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

// A scenario argument is a path when the file exists, otherwise the name of a
// bundled fixture ("fp17_1" or "fp17_1.scenario").
std::pair<std::string, std::string> load_scenario_text(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return {ss.str(), arg};
    }
    std::string name = arg;
    const std::string suffix = ".scenario";
    if (name.size() > suffix.size() && name.ends_with(suffix))
        name.resize(name.size() - suffix.size());
    if (const charp::Fixture* f = charp::find_fixture(name))
        return {f->text, name + suffix};
    throw charp::DomainError("no such file or bundled fixture: " + arg);
}

int cmd_run(const std::string& arg, const charp::RunOptions& opt, bool text,
            const std::string& out_path) {
    auto [source, name] = load_scenario_text(arg);
    charp::Scenario sc = charp::parse_scenario(source, name);
    nlohmann::json report = charp::run_scenario(sc, opt);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw charp::DomainError("cannot open output file: " + out_path);
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (text)
        os << charp::render_text(report);
    else
        os << report.dump(2) << "\n";
    return report.at("ok").get<bool>() ? 0 : 2;
}

int cmd_fixtures() {
    for (const auto& f : charp::bundled_fixtures()) {
        charp::Scenario sc = charp::parse_scenario(f.text, f.name + ".scenario");
        std::cout << f.name << "  (p=" << sc.p << ")  " << sc.title << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"charp-lab: special ideals, test ideals, and tight closure over F_p"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a scenario file or a bundled fixture");
    std::string scenario_arg;
    run->add_option("scenario", scenario_arg, "scenario file path or bundled fixture name")
        ->required();
    bool as_json = false;
    bool as_text = false;
    run->add_flag("--json", as_json, "emit the JSON report (default)");
    run->add_flag("--text", as_text, "emit the human-readable report");
    charp::RunOptions opt;
    run->add_option("--levels", opt.levels, "closure level bound (default 5)")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--degree-cap", opt.degree_cap, "skew truncation degree cap (default 6)")
        ->check(CLI::PositiveNumber);
    std::int64_t pair_budget = 0;
    run->add_option("--pair-budget", pair_budget, "Groebner S-pair budget override")
        ->check(CLI::PositiveNumber);
    std::string alt_u;
    run->add_option("--alt-u", alt_u,
                    "rerun the lattice filtered by this single multiplier and diff the members");
    std::string out_path;
    run->add_option("--out", out_path, "write the report to a file instead of stdout");

    auto* fixtures = app.add_subcommand("fixtures", "List the bundled fixtures");
    auto* check = app.add_subcommand("check", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage errors exit 1 like every other error; --help stays 0.
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            if (as_text && as_json)
                throw charp::DomainError("--json and --text are mutually exclusive");
            if (pair_budget > 0) charp::set_default_pair_budget(pair_budget);
            if (!alt_u.empty()) opt.alt_u = alt_u;
            return cmd_run(scenario_arg, opt, as_text, out_path);
        }
        if (*fixtures) return cmd_fixtures();
        if (*check) return charp::run_acceptance(std::cout) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
