#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/errors.hpp"
#include "charp/fixtures.hpp"
#include "charp/scenario.hpp"

#include <fstream>
#include <sstream>
#include <string>

using namespace charp;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("bundled fixtures run clean and deterministically") {
    for (const auto& f : bundled_fixtures()) {
        CAPTURE(f.name);
        Scenario sc = parse_scenario(f.text, f.name + ".scenario");
        nlohmann::json first = run_scenario(sc);
        CHECK(first.at("ok").get<bool>());
        nlohmann::json second = run_scenario(sc);
        CHECK(first.at("digest").get<std::string>() == second.at("digest").get<std::string>());
        std::string text = render_text(first);
        CHECK(text.find("result: OK") != std::string::npos);
        CHECK(text.find("digest: fnv1a:") != std::string::npos);
    }
}

TEST_CASE("embedded fixtures match the files on disk") {
    for (const auto& f : bundled_fixtures()) {
        CAPTURE(f.name);
        CHECK(f.text == slurp(std::string(CHARP_FIXTURE_DIR) + "/" + f.name + ".scenario"));
    }
    CHECK(find_fixture("fp17_1") != nullptr);
    CHECK(find_fixture("nope") == nullptr);
}

TEST_CASE("scenario parser reports positions") {
    const char* unknown_header =
        "title = t\n"
        "p = 2\n"
        "vars = X\n"
        "a = 0\n"
        "bogus = 1\n";
    try {
        parse_scenario(unknown_header, "t");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
    }

    const char* unknown_task =
        "p = 2\n"
        "vars = X\n"
        "a = 0\n"
        "\n"
        "[nope]\n";
    try {
        parse_scenario(unknown_task, "t");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
    }

    const char* unknown_task_key =
        "p = 2\n"
        "vars = X\n"
        "a = 0\n"
        "\n"
        "[chain]\n"
        "surprise = 1\n";
    try {
        parse_scenario(unknown_task_key, "t");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
    }

    CHECK_THROWS_AS(parse_scenario("p = 2\nvars = X\n", "t"), ParseError);
    // composite characteristic parses but refuses to run
    CHECK_THROWS_AS(run_scenario(parse_scenario("p = 6\nvars = X\na = 0\n", "t")), DomainError);
}

TEST_CASE("empty task list reports the scenario echo only") {
    Scenario sc = parse_scenario("title = echo\np = 2\nvars = X, Y\na = (X*Y)\n", "t");
    nlohmann::json rep = run_scenario(sc);
    CHECK(rep.at("ok").get<bool>());
    CHECK(rep.at("tasks").empty());
    CHECK(rep.at("scenario").at("p").get<int>() == 2);
    CHECK(rep.at("scenario").at("a").get<std::string>() == "(X*Y)");
}

TEST_CASE("task ideal literals live in the quotient") {
    // "0" in a task names the defining ideal, not the zero ideal of the
    // ambient polynomial ring
    const char* text =
        "p = 2\n"
        "vars = X, Y\n"
        "a = (X*Y)\n"
        "\n"
        "[special-ideals]\n"
        "expect_members_contain = 0\n";
    nlohmann::json rep = run_scenario(parse_scenario(text, "t"));
    CHECK(rep.at("ok").get<bool>());
}

TEST_CASE("falsified expectations flip ok without throwing") {
    const char* text =
        "p = 2\n"
        "vars = X, Y, Z\n"
        "a = (X*Y, X*Z, Y*Z)\n"
        "\n"
        "[special-ideals]\n"
        "expect_member_count = 7\n";
    nlohmann::json rep = run_scenario(parse_scenario(text, "t"));
    CHECK_FALSE(rep.at("ok").get<bool>());
    bool found_mismatch = false;
    for (const auto& t : rep.at("tasks"))
        for (const auto& c : t.at("checks"))
            if (!c.at("ok").get<bool>()) found_mismatch = true;
    CHECK(found_mismatch);
    CHECK(render_text(rep).find("result: FALSIFIED") != std::string::npos);
}

TEST_CASE("alternative multiplier diff") {
    const Fixture* f = find_fixture("fp17_1");
    REQUIRE(f != nullptr);
    Scenario sc = parse_scenario(f->text, "fp17_1.scenario");
    RunOptions opt;
    opt.alt_u = "X*Y*Z";
    nlohmann::json rep = run_scenario(sc, opt);
    CHECK(rep.at("ok").get<bool>());
    REQUIRE(rep.contains("alt_u"));
    CHECK(rep.at("alt_u").at("added").empty());
    CHECK(rep.at("alt_u").at("removed").empty());
    CHECK(rep.at("alt_u").at("member_count").get<int>() == 9);
}

TEST_CASE("digest ignores timing but tracks content") {
    const Fixture* f = find_fixture("regular");
    REQUIRE(f != nullptr);
    nlohmann::json rep = run_scenario(parse_scenario(f->text, "regular.scenario"));
    nlohmann::json altered = rep;
    altered["tasks"][0]["time_ms"] = 999999;
    CHECK(report_digest(altered) == rep.at("digest").get<std::string>());
    altered["tasks"][0]["kind"] = "other";
    CHECK(report_digest(altered) != rep.at("digest").get<std::string>());
}
