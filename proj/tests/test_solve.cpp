// SPDX-License-Identifier: MIT
#include <qasp/bench.hpp>
#include <qasp/error.hpp>
#include <qasp/ground.hpp>
#include <qasp/solve.hpp>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"

using namespace qasp;
using test::atoms;

namespace {

Program example(const std::string& name) { return read_program_file(QASP_SOURCE_DIR "/tasks/examples/" + name); }

std::vector<std::string> printed(const std::vector<AnswerSet>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets)
        out.push_back(s.to_string());
    return out;
}

std::set<std::string> printed(const Reduct& r) {
    std::set<std::string> out;
    for (const auto& rule : r.rules) {
        std::string s = to_string(rule.head);
        for (std::size_t i = 0; i < rule.body.size(); ++i)
            s += (i == 0 ? " :- " : ", ") + to_string(rule.body[i]);
        out.insert(s + ".");
    }
    return out;
}

} // namespace

TEST_CASE("herbrand base") {
    CHECK(herbrand_base(example("p4.lp")) == atoms("b w c s"));
    CHECK(herbrand_base(Program{}).empty());
}

TEST_CASE("classical satisfaction") {
    const Program p2 = example("p2.lp");
    CHECK(satisfies(atoms("b w"), p2));
    CHECK_FALSE(satisfies(atoms("w"), p2));
    CHECK(satisfies(atoms("c w"), p2));
    CHECK_FALSE(satisfies(atoms(""), p2));

    const Program bounded = parse_program("1{a; b}1.");
    CHECK_FALSE(satisfies(atoms(""), bounded));
    CHECK(satisfies(atoms("a"), bounded));
    CHECK_FALSE(satisfies(atoms("a b"), bounded));

    const Program conditional = parse_program("{a : c; b}1 :- d. c. d.");
    CHECK(satisfies(atoms("a c d"), conditional));
    CHECK_FALSE(satisfies(atoms("a b c d"), conditional));
    CHECK(satisfies(atoms("a b d"), parse_program("{a : c; b}1 :- d. d.")));

    const Program constraint = parse_program(":- a, not b.");
    CHECK_FALSE(satisfies(atoms("a"), constraint));
    CHECK(satisfies(atoms("a b"), constraint));
    CHECK(satisfies(atoms("zzz"), Program{}));
}

TEST_CASE("reducts") {
    const Program p1 = example("p1.lp");
    CHECK(printed(gl_reduct(p1, atoms(""))) == std::set<std::string>{"b :- w."});
    CHECK(printed(gl_reduct(p1, atoms("c"))).empty());

    const Program three = example("three.lp");
    CHECK(printed(gl_reduct(three, atoms("s c"))) == std::set<std::string>{"s.", "c."});
    CHECK(printed(gl_reduct(three, atoms("c"))) == std::set<std::string>{"c."});
    CHECK(printed(gl_reduct(three, atoms("w"))) == std::set<std::string>{"b :- w.", "c."});

    const Program cond = parse_program("{a : c} :- d, not e.");
    CHECK(printed(gl_reduct(cond, atoms("a c"))) == std::set<std::string>{"a :- d, c."});
    CHECK(printed(gl_reduct(cond, atoms("a"))).empty());
    CHECK(printed(gl_reduct(cond, atoms("a c e"))).empty());
}

TEST_CASE("least model") {
    Reduct r;
    r.rules.push_back({Atom("b"), {Atom("w")}});
    CHECK(least_model(r).empty());
    r.rules.push_back({Atom("w"), {}});
    CHECK(least_model(r) == atoms("b w"));
    r.rules.push_back({Atom("x"), {Atom("x")}});
    CHECK(least_model(r) == atoms("b w"));
}

TEST_CASE("answer-set check") {
    const Program p3 = example("p3.lp");
    CHECK(is_answer_set(p3, atoms("")));
    CHECK(is_answer_set(p3, atoms("b w")));
    CHECK_FALSE(is_answer_set(p3, atoms("w")));
    CHECK_FALSE(is_answer_set(p3, atoms("b")));
    CHECK_FALSE(is_answer_set(example("p2.lp"), atoms("b w c")));
    // unsupported atom
    CHECK_FALSE(is_answer_set(parse_program("a :- not b."), atoms("a b")));
}

TEST_CASE("worked examples enumerate as expected") {
    CHECK(printed(enumerate_answer_sets(example("p1.lp"))) == std::vector<std::string>{""});
    CHECK(printed(enumerate_answer_sets(example("p2.lp"))) == std::vector<std::string>{"b w"});
    CHECK(printed(enumerate_answer_sets(example("p2c.lp"))) == std::vector<std::string>{"c w"});
    CHECK(printed(enumerate_answer_sets(example("p3.lp"))) == std::vector<std::string>{"", "b w"});
    CHECK(printed(enumerate_answer_sets(example("p4.lp"))) ==
          std::vector<std::string>{"b s w", "c", "c s", "c s w", "c w", "s"});
    CHECK(printed(enumerate_answer_sets(example("three.lp"))) == std::vector<std::string>{"c", "c s", "s"});
}

TEST_CASE("both strategies agree") {
    SolveOptions exhaustive;
    exhaustive.strategy = SearchStrategy::Exhaustive;
    for (const char* name : {"p1.lp", "p2.lp", "p2c.lp", "p3.lp", "p4.lp", "three.lp"})
        CHECK(enumerate_answer_sets(example(name)) == enumerate_answer_sets(example(name), exhaustive));
    // no stable model
    CHECK(enumerate_answer_sets(parse_program("a :- not b. b :- not c. c :- not a.")).empty());
    CHECK(enumerate_answer_sets(parse_program("a :- not b. b :- not c. c :- not a."), exhaustive).empty());
    CHECK(enumerate_answer_sets(parse_program("a. :- a.")).empty());
}

TEST_CASE("marble program has twenty answer sets") {
    const auto sets = enumerate_answer_sets(marble_program());
    CHECK(sets.size() == 20);
    const Program g = ground(marble_program());
    for (const auto& s : sets)
        CHECK(is_answer_set(g, s.atoms));
}

TEST_CASE("results are sorted by printed form and truncated by limit") {
    const auto sets = enumerate_answer_sets(parse_program("{a(1..12)}2."));
    REQUIRE(sets.size() == 1 + 12 + 66);
    for (std::size_t i = 1; i < sets.size(); ++i)
        CHECK(printed_less(sets[i - 1], sets[i]));
    SolveOptions o;
    o.limit = 3;
    const auto first = enumerate_answer_sets(parse_program("{a(1..12)}2."), o);
    CHECK(first == std::vector<AnswerSet>(sets.begin(), sets.begin() + 3));
}

TEST_CASE("structural and resource errors") {
    CHECK_THROWS_AS(enumerate_answer_sets(parse_program("a :- a, not b.")), ValidationError);
    CHECK_THROWS_AS(enumerate_answer_sets(parse_program("a :- not a.")), ValidationError);
    CHECK_THROWS_AS(enumerate_answer_sets(parse_program("{b}. a :- b, not a.")), ValidationError);
    SolveOptions tight;
    tight.strategy = SearchStrategy::Exhaustive;
    tight.max_atoms = 3;
    CHECK_THROWS_AS(enumerate_answer_sets(example("p4.lp"), tight), ResourceError);
    tight.max_atoms = 4;
    CHECK(enumerate_answer_sets(example("p4.lp"), tight).size() == 6);
    // the propagating search has no such budget
    SolveOptions propagate;
    propagate.max_atoms = 3;
    CHECK(enumerate_answer_sets(example("p4.lp"), propagate).size() == 6);
    CHECK_THROWS_AS(brute_force_answer_sets(parse_program("{a(1..21)}.")), ResourceError);
}

TEST_CASE("brute force matches the oracle and the solver") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Program p = test::random_program(rng);
        const auto expected = test::oracle_answer_sets(p);
        INFO(print_program(p));
        CHECK(test::as_sets(brute_force_answer_sets(p)) == expected);
        CHECK(test::as_sets(enumerate_answer_sets(p)) == expected);
    }
}
