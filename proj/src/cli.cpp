// SPDX-License-Identifier: MIT
#include <qasp/cli.hpp>

#include <qasp/bench.hpp>
#include <qasp/ground.hpp>
#include <qasp/principles.hpp>
#include <qasp/reason.hpp>
#include <qasp/solve.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace qasp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
    bool json = false;
    std::optional<long> seed;
    std::size_t max_atoms = 64;
    bool exhaustive = false;

    [[nodiscard]] SolveOptions solve_options() const {
        SolveOptions o;
        o.max_atoms = max_atoms;
        o.strategy = exhaustive ? SearchStrategy::Exhaustive : SearchStrategy::Propagate;
        return o;
    }
};

Program load(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_program(ss.str());
    }
    return read_program_file(path);
}

std::set<Atom> parse_atoms(const std::vector<std::string>& texts) {
    std::set<Atom> out;
    for (const auto& t : texts)
        out.insert(parse_atom(t));
    return out;
}

Json atom_list(const std::set<Atom>& atoms) {
    Json out = Json::array();
    for (const auto& a : atoms)
        out.push_back(to_string(a));
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Answer-set enumeration, counting and plausibility for logic programs", "qasp"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Settings settings;
    app.add_flag("--json", settings.json, "Structured output");
    app.add_option("--seed", settings.seed, "Accepted for compatibility; solving is deterministic");
    app.add_option("--max-atoms", settings.max_atoms, "Ground-atom budget of the exhaustive strategy")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--exhaustive", settings.exhaustive, "Use exhaustive search instead of branch-and-propagate");

    std::string file;
    auto* solve_cmd = app.add_subcommand("solve", "Print all answer sets");
    solve_cmd->add_option("file", file, "Program file or - for standard input")->required();
    bool all = false;
    std::size_t limit = 0;
    auto* all_flag = solve_cmd->add_flag("--all", all, "Print every answer set (default)");
    solve_cmd->add_option("-n", limit, "Stop after N answer sets; 0 prints all")->excludes(all_flag);

    auto* count_cmd = app.add_subcommand("count", "Print the number of answer sets");
    count_cmd->add_option("file", file)->required();

    std::vector<std::string> questions;
    auto* plaus_cmd = app.add_subcommand("plausibility", "Answer sets satisfying the question over all answer sets");
    plaus_cmd->add_option("file", file)->required();
    plaus_cmd->add_option("--question", questions, "Question atom; overrides question/1 facts");

    std::string observation;
    std::vector<std::string> abducibles;
    auto* abduce_cmd = app.add_subcommand("abduce", "Print the minimal explanations of an observation");
    abduce_cmd->add_option("file", file)->required();
    abduce_cmd->add_option("--observe", observation, "Observed atom")->required();
    abduce_cmd->add_option("--abducible", abducibles, "Abducible atom; default: prem/1 and nprem/1 choices");

    std::string benchmark;
    std::string tasks_dir;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark and compare with the expected values");
    bench_cmd->add_option("benchmark", benchmark)->required()->check(CLI::IsMember({"suppression", "marbles"}));
    bench_cmd->add_option("--tasks", tasks_dir, "Read <case>_<group>.lp programs from this directory")
        ->check(CLI::ExistingDirectory);

    auto* ground_cmd = app.add_subcommand("ground", "Print the ground program");
    ground_cmd->add_option("file", file)->required();

    std::string case_name;
    std::string group_name;
    auto* task_cmd = app.add_subcommand("task", "Print a generated suppression-task program");
    task_cmd->add_option("case", case_name)->required()->check(
        CLI::IsMember({"essay", "not_essay", "library", "not_library"}));
    task_cmd->add_option("group", group_name)->required()->check(CLI::IsMember({"I", "II", "III"}));

    std::vector<std::string> argv_store{"qasp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    if (settings.seed)
        err << "warning: --seed is ignored; solving is deterministic\n";
    const SolveOptions options = settings.solve_options();

    try {
        if (*solve_cmd) {
            SolveOptions o = options;
            if (limit > 0)
                o.limit = limit;
            const auto sets = enumerate_answer_sets(load(file, in), o);
            if (settings.json) {
                Json list = Json::array();
                for (const auto& s : sets)
                    list.push_back(atom_list(s.atoms));
                Json j = {{"result", sets.empty() ? "UNSATISFIABLE" : "SATISFIABLE"},
                          {"count", sets.size()},
                          {"answer_sets", list}};
                out << j.dump(2) << '\n';
            }
            else {
                for (const auto& s : sets)
                    out << s.to_string() << '\n';
                out << (sets.empty() ? "UNSATISFIABLE" : "SATISFIABLE") << '\n';
            }
        }
        else if (*count_cmd) {
            const auto n = count_answer_sets(load(file, in), options);
            if (settings.json)
                out << Json{{"count", n}}.dump(2) << '\n';
            else
                out << n << '\n';
        }
        else if (*plaus_cmd) {
            std::optional<std::set<Atom>> q;
            if (!questions.empty())
                q = parse_atoms(questions);
            const auto r = plausibility(load(file, in), q, options);
            if (settings.json) {
                Json j = {{"question", atom_list(r.question)},
                          {"numerator", r.numerator},
                          {"denominator", r.denominator},
                          {"total", r.total},
                          {"value", {{"num", r.value.num()}, {"den", r.value.den()}}},
                          {"percent", r.percent}};
                out << j.dump(2) << '\n';
            }
            else
                out << r.numerator << '/' << r.denominator << " = " << r.percent << "%\n";
        }
        else if (*abduce_cmd) {
            const Program p = load(file, in);
            const Atom observed = parse_atom(observation);
            const std::set<Atom> candidates = abducibles.empty() ? default_abducibles(p) : parse_atoms(abducibles);
            const auto explanations = minimal_explanations(p, observed, candidates, options);
            if (settings.json) {
                Json list = Json::array();
                for (const auto& e : explanations)
                    list.push_back(atom_list(e.atoms));
                Json j = {{"observation", to_string(observed)},
                          {"abducibles", atom_list(candidates)},
                          {"explanations", list}};
                out << j.dump(2) << '\n';
            }
            else
                for (const auto& e : explanations)
                    out << e.to_string() << '\n';
        }
        else if (*bench_cmd) {
            bool matched = false;
            if (benchmark == "suppression") {
                TaskSource source = build_task;
                if (!tasks_dir.empty())
                    source = [dir = tasks_dir](const TaskSpec& s) { return load_task_fixture(dir, s); };
                const auto rows = run_suppression(source, options);
                out << (settings.json ? format_json(rows) : format_text(rows));
                matched = all_match(rows);
            }
            else {
                const auto report = run_marbles(options);
                out << (settings.json ? format_json(report) : format_text(report));
                matched = report.match;
            }
            if (!matched) {
                err << "benchmark mismatch\n";
                return mismatch;
            }
        }
        else if (*ground_cmd) {
            const Program g = ground(load(file, in));
            if (settings.json) {
                Json rules = Json::array();
                for (const auto& r : g.rules)
                    rules.push_back(to_string(r));
                out << Json{{"rules", rules}}.dump(2) << '\n';
            }
            else
                out << print_program(g);
        }
        else if (*task_cmd) {
            const Program p = build_task(TaskSpec{parse_case(case_name), parse_group(group_name)});
            if (settings.json) {
                Json rules = Json::array();
                for (const auto& r : p.rules)
                    rules.push_back(to_string(r));
                out << Json{{"rules", rules}}.dump(2) << '\n';
            }
            else
                out << print_program(p);
        }
    }
    catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return resource_error;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

} // namespace qasp::cli
