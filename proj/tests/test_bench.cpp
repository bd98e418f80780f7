// SPDX-License-Identifier: MIT
#include <qasp/bench.hpp>
#include <qasp/error.hpp>

#include "catch_amalgamated.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace qasp;
namespace fs = std::filesystem;

TEST_CASE("expected table") {
    const auto rows = expected_table();
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].spec == TaskSpec{TaskCase::Essay, TaskGroup::I});
    CHECK(rows[2].question_models == 3);
    CHECK(rows[2].total_models == 7);
    CHECK(rows[2].asp_percent == 43);
    CHECK(rows[7].byrne_percent == 13);
    CHECK_THROWS_AS(parse_expected_table("essay\tI\t1\t2\n"), Error);
    CHECK_THROWS_AS(parse_expected_table("essay\tI\t1\t2\tx\t1\t1\n"), Error);
    CHECK(parse_expected_table("# comment\n\n").empty());
}

TEST_CASE("suppression rows match") {
    const auto rows = run_suppression();
    for (const auto& r : rows) {
        INFO(fixture_name(r.spec));
        CHECK(r.match);
        CHECK(r.computed_percent == percent_of(r.computed_question_models, std::max<std::uint64_t>(1, r.computed_total_models)));
    }
    CHECK(all_match(rows));
    const auto from_files = run_suppression(
        [](const TaskSpec& s) { return load_task_fixture(QASP_SOURCE_DIR "/tasks/suppression", s); });
    CHECK(all_match(from_files));
}

TEST_CASE("a tampered fixture is reported") {
    const fs::path dir = fs::temp_directory_path() / "qasp_test_bench_tampered";
    fs::remove_all(dir);
    fs::copy(QASP_SOURCE_DIR "/tasks/suppression", dir);
    std::ofstream(dir / "essay_III.lp", std::ios::app) << "prem(e).\n";
    const auto rows = run_suppression([&](const TaskSpec& s) { return load_task_fixture(dir, s); });
    CHECK_FALSE(all_match(rows));
    std::size_t mismatches = 0;
    for (const auto& r : rows)
        mismatches += r.match ? 0 : 1;
    CHECK(mismatches == 1);
    CHECK_FALSE(rows[2].match);
    fs::remove_all(dir);
    CHECK_THROWS_AS(load_task_fixture(dir, {}), Error);
}

TEST_CASE("marble report") {
    const auto report = run_marbles();
    CHECK(report.match);
    CHECK(report.total == 20);
    REQUIRE(report.rows.size() == 5);
    const std::uint64_t ways[] = {0, 3, 8, 9, 0};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(report.rows[i].ways == ways[i]);
        CHECK(report.rows[i].plausibility == Rational(ways[i], 20));
    }
    CHECK(report.rows[3].bag == "bbbw");
}

TEST_CASE("report formats") {
    const auto rows = run_suppression();
    const auto j = nlohmann::json::parse(format_json(rows));
    REQUIRE(j.size() == 12);
    CHECK(j[5]["case"] == "not_essay");
    CHECK(j[5]["group"] == "III");
    CHECK(j[5]["computed_percent"] == 63);
    CHECK(j[5]["match"] == true);
    const std::string text = format_text(rows);
    CHECK(text.find("library     II    1/7       1/7       14") != std::string::npos);

    const auto m = nlohmann::json::parse(format_json(run_marbles()));
    CHECK(m["total"] == 20);
    CHECK(m["rows"][2]["plausibility"]["num"] == 2);
    CHECK(m["rows"][2]["plausibility"]["den"] == 5);
    CHECK(format_text(run_marbles()).find("total 20") != std::string::npos);
}
