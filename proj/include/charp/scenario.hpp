#pragma once

#include "charp/skewmod.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace charp {

// One task section of a scenario file: section name plus its key/value lines,
// each with the source line number for error reporting.
struct ScenarioTask {
    std::string kind;
    int line = 0;
    std::vector<std::tuple<std::string, std::string, int>> entries;
};

// Parsed scenario: a ring presentation description and an ordered task list.
struct Scenario {
    std::string source;
    std::string title;
    std::int64_t p = 0;
    std::vector<std::string> vars;
    std::string a_text;
    int a_line = 1;
    bool a_prime = false;
    bool check_radical = true;
    std::vector<std::string> seed_texts;
    std::vector<int> seed_lines;
    std::vector<ScenarioTask> tasks;
};

// Line-oriented text format:
//
//   # comment                      blank lines and #-lines are skipped
//   key = value                    header keys before the first section
//   [task-name]                    starts a task; its key = value lines follow
//
// Header keys: title, p, vars, a, a_prime, a_radical, seeds. Task names:
// fpure-check, special-ideals, s-test-ideal, realize, tight-closure, chain,
// skewmod-crosscheck. Unknown keys and task names are rejected with their
// line number. Ideal literals are "(f, g, ...)", "m", "0", "R" or "1";
// multiplicative sets are One, RCirc, powers(<poly>) or
// complement(<ideal>; <ideal>; ...).
Scenario parse_scenario(const std::string& text, const std::string& source_name);

struct RunOptions {
    int levels = 5;
    int degree_cap = 6;
    std::optional<std::string> alt_u;
};

// Executes the tasks in order over one shared presentation and lattice.
// Expectation keys (expect_*) become check records; the report's "ok" field
// is true exactly when every check held. Hard failures (bad rings, budget
// exhaustion) propagate as exceptions.
nlohmann::json run_scenario(const Scenario& sc, const RunOptions& opt = {});

// Human-readable rendering of a report.
std::string render_text(const nlohmann::json& report);

// FNV-1a fingerprint of the canonical serialization; timing fields and the
// digest itself are excluded, so reruns of one scenario agree byte for byte.
std::string report_digest(const nlohmann::json& report);

} // namespace charp
