// SPDX-License-Identifier: MIT
#ifndef QASP_BENCH_HPP
#define QASP_BENCH_HPP

#include <qasp/principles.hpp>
#include <qasp/reason.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qasp {

struct BenchRow {
    TaskSpec spec;
    // Expected values; the experimental percentages are informational only.
    std::uint64_t question_models = 0;
    std::uint64_t total_models = 0;
    std::int64_t asp_percent = 0;
    std::int64_t byrne_percent = 0;
    std::int64_t dieussaert_percent = 0;
    // Filled by run_suppression.
    std::uint64_t computed_question_models = 0;
    std::uint64_t computed_total_models = 0;
    std::int64_t computed_percent = 0;
    bool match = false;
};

/// Parses tab-separated rows: case, group, question, total, asp, byrne,
/// dieussaert. Lines starting with '#' and blank lines are skipped.
[[nodiscard]] std::vector<BenchRow> parse_expected_table(std::string_view tsv);
/// The twelve rows committed in tasks/suppression/expected.tsv.
[[nodiscard]] std::vector<BenchRow> expected_table();

using TaskSource = std::function<Program(const TaskSpec&)>;

/// Reads <dir>/<case>_<group>.lp.
[[nodiscard]] Program load_task_fixture(const std::filesystem::path& dir, const TaskSpec& spec);
[[nodiscard]] Program read_program_file(const std::filesystem::path& path);

[[nodiscard]] std::vector<BenchRow> run_suppression(const TaskSource& source = build_task,
                                                    const SolveOptions& options = {});

struct MarbleRow {
    int case_id = 0;
    std::string bag;
    std::uint64_t expected_ways = 0;
    std::uint64_t ways = 0;
    Rational plausibility;
    bool match = false;
};

struct MarbleReport {
    std::vector<MarbleRow> rows;
    std::uint64_t total = 0;
    bool match = false;
};

/// The four-marble program committed in tasks/marbles/marbles.lp.
[[nodiscard]] Program marble_program();
[[nodiscard]] MarbleReport run_marbles(const SolveOptions& options = {});

[[nodiscard]] bool all_match(const std::vector<BenchRow>& rows);

[[nodiscard]] std::string format_text(const std::vector<BenchRow>& rows);
[[nodiscard]] std::string format_json(const std::vector<BenchRow>& rows);
[[nodiscard]] std::string format_text(const MarbleReport& report);
[[nodiscard]] std::string format_json(const MarbleReport& report);

} // namespace qasp

#endif
