// SPDX-License-Identifier: MIT
#include <qasp/bench.hpp>

#include "embedded_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qasp {

namespace {

std::vector<std::vector<std::string>> tsv_records(std::string_view tsv) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in{std::string(tsv)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        for (std::string f; std::getline(ls, f, '\t');)
            fields.push_back(f);
        out.push_back(std::move(fields));
    }
    return out;
}

template <class Int>
Int to_int(const std::string& s) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error("malformed number '" + s + "' in expected table");
    return v;
}

struct MarbleExpectation {
    int case_id;
    std::string bag;
    std::uint64_t ways;
};

std::vector<MarbleExpectation> marble_expectations() {
    std::vector<MarbleExpectation> out;
    for (const auto& f : tsv_records(embedded::marbles_expected)) {
        if (f.size() != 3)
            throw Error("marble table rows need 3 fields");
        out.push_back({to_int<int>(f[0]), f[1], to_int<std::uint64_t>(f[2])});
    }
    return out;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::string fraction(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "/" + std::to_string(b); }

} // namespace

std::vector<BenchRow> parse_expected_table(std::string_view tsv) {
    std::vector<BenchRow> rows;
    for (const auto& f : tsv_records(tsv)) {
        if (f.size() != 7)
            throw Error("expected table rows need 7 fields, got " + std::to_string(f.size()));
        BenchRow r;
        r.spec = TaskSpec{parse_case(f[0]), parse_group(f[1])};
        r.question_models = to_int<std::uint64_t>(f[2]);
        r.total_models = to_int<std::uint64_t>(f[3]);
        r.asp_percent = to_int<std::int64_t>(f[4]);
        r.byrne_percent = to_int<std::int64_t>(f[5]);
        r.dieussaert_percent = to_int<std::int64_t>(f[6]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<BenchRow> expected_table() { return parse_expected_table(embedded::suppression_expected); }

Program read_program_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_program(ss.str());
}

Program load_task_fixture(const std::filesystem::path& dir, const TaskSpec& spec) {
    return read_program_file(dir / fixture_name(spec));
}

std::vector<BenchRow> run_suppression(const TaskSource& source, const SolveOptions& options) {
    auto rows = expected_table();
    for (auto& r : rows) {
        const auto report = plausibility(source(r.spec), std::nullopt, options);
        r.computed_question_models = report.numerator;
        r.computed_total_models = report.total;
        r.computed_percent = report.percent;
        r.match = r.computed_percent == r.asp_percent && r.computed_question_models == r.question_models &&
                  r.computed_total_models == r.total_models;
    }
    return rows;
}

bool all_match(const std::vector<BenchRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.match; });
}

Program marble_program() { return parse_program(embedded::marble_program); }

MarbleReport run_marbles(const SolveOptions& options) {
    const Program program = marble_program();
    MarbleReport report;
    report.total = count_answer_sets(program, options);
    std::uint64_t sum = 0;
    for (const auto& x : marble_expectations()) {
        const Atom select("select", {Term::integer(x.case_id)});
        const auto pr = plausibility(program, std::set<Atom>{select}, options);
        MarbleRow row{x.case_id, x.bag, x.ways, pr.numerator, pr.value, pr.numerator == x.ways};
        sum += row.ways;
        report.rows.push_back(std::move(row));
    }
    std::uint64_t expected_total = 0;
    for (const auto& r : report.rows)
        expected_total += r.expected_ways;
    report.match = report.total == expected_total && sum == report.total &&
                   std::all_of(report.rows.begin(), report.rows.end(), [](const MarbleRow& r) { return r.match; });
    return report;
}

std::string format_text(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << pad("case", 12) << pad("group", 6) << pad("expected", 10) << pad("computed", 10) << pad("asp%", 6)
       << pad("ours%", 7) << pad("byrne%", 8) << pad("dieus.%", 8) << "match\n";
    for (const auto& r : rows) {
        os << pad(std::string(name_of(r.spec.task_case)), 12) << pad(std::string(name_of(r.spec.group)), 6)
           << pad(fraction(r.question_models, r.total_models), 10)
           << pad(fraction(r.computed_question_models, r.computed_total_models), 10)
           << pad(std::to_string(r.asp_percent), 6) << pad(std::to_string(r.computed_percent), 7)
           << pad(std::to_string(r.byrne_percent), 8) << pad(std::to_string(r.dieussaert_percent), 8)
           << (r.match ? "yes" : "NO") << '\n';
    }
    return os.str();
}

std::string format_json(const std::vector<BenchRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        out.push_back({
            {"case", name_of(r.spec.task_case)},
            {"group", name_of(r.spec.group)},
            {"question_models", r.question_models},
            {"total_models", r.total_models},
            {"asp_percent", r.asp_percent},
            {"byrne_percent", r.byrne_percent},
            {"dieussaert_percent", r.dieussaert_percent},
            {"computed_question_models", r.computed_question_models},
            {"computed_total_models", r.computed_total_models},
            {"computed_percent", r.computed_percent},
            {"match", r.match},
        });
    }
    return out.dump(2) + "\n";
}

std::string format_text(const MarbleReport& report) {
    std::ostringstream os;
    os << pad("case", 6) << pad("bag", 6) << pad("ways", 6) << pad("expected", 10) << pad("plausibility", 14)
       << "match\n";
    for (const auto& r : report.rows) {
        std::ostringstream value;
        value << std::fixed << std::setprecision(2) << r.plausibility.to_double();
        os << pad(std::to_string(r.case_id), 6) << pad(r.bag, 6) << pad(std::to_string(r.ways), 6)
           << pad(std::to_string(r.expected_ways), 10)
           << pad(fraction(r.ways, std::max<std::uint64_t>(1, report.total)) + " = " + value.str(), 14)
           << (r.match ? "yes" : "NO") << '\n';
    }
    os << "total " << report.total << '\n';
    return os.str();
}

std::string format_json(const MarbleReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        rows.push_back({
            {"case", r.case_id},
            {"bag", r.bag},
            {"ways", r.ways},
            {"expected_ways", r.expected_ways},
            {"plausibility", {{"num", r.plausibility.num()}, {"den", r.plausibility.den()}}},
            {"match", r.match},
        });
    }
    nlohmann::ordered_json out = {{"total", report.total}, {"rows", rows}, {"match", report.match}};
    return out.dump(2) + "\n";
}

} // namespace qasp
