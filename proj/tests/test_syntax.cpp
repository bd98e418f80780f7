// SPDX-License-Identifier: MIT
#include <qasp/error.hpp>
#include <qasp/syntax.hpp>

#include "catch_amalgamated.hpp"

#include <random>

using namespace qasp;

TEST_CASE("normal rule with negation") {
    const Program p = parse_program("b :- w, not c.");
    REQUIRE(p.rules.size() == 1);
    const auto& r = std::get<NormalRule>(p.rules[0]);
    CHECK(r.head == Atom("b"));
    CHECK(r.body.positive == std::vector{Atom("w")});
    CHECK(r.body.negative == std::vector{Atom("c")});
    CHECK(print_program(p) == "b :- w, not c.\n");
}

TEST_CASE("facts, constraints and comments") {
    const Program p = parse_program("% header\nw.  % trailing\n:- b, not w.\n");
    REQUIRE(p.rules.size() == 2);
    CHECK(std::get<NormalRule>(p.rules[0]).is_fact());
    const auto& c = std::get<ConstraintRule>(p.rules[1]);
    CHECK(c.body.positive == std::vector{Atom("b")});
    CHECK(c.body.negative == std::vector{Atom("w")});
}

TEST_CASE("choice rules with bounds, bodies and conditions") {
    const Program p = parse_program("1{a; b}2 :- c.\n{s; c}.\n{step(S,M,C) : conjecture(M,C)}1 :- state(S).");
    REQUIRE(p.rules.size() == 3);
    const auto& c0 = std::get<ChoiceRule>(p.rules[0]);
    CHECK(c0.lower == 1u);
    CHECK(c0.upper == 2u);
    CHECK(c0.elements.size() == 2);
    CHECK(c0.body.positive == std::vector{Atom("c")});
    const auto& c1 = std::get<ChoiceRule>(p.rules[1]);
    CHECK_FALSE(c1.lower.has_value());
    CHECK_FALSE(c1.upper.has_value());
    const auto& c2 = std::get<ChoiceRule>(p.rules[2]);
    REQUIRE(c2.elements.size() == 1);
    CHECK(c2.elements[0].condition.size() == 1);
    CHECK(to_string(p.rules[2]) == "{step(S,M,C):conjecture(M,C)}1 :- state(S).");
}

TEST_CASE("ranges, integers and nested terms") {
    const Program p = parse_program("p(1..4). q(-2, f(a, 3)).");
    const auto& a = std::get<NormalRule>(p.rules[0]).head;
    CHECK(a.args[0] == Term::range(1, 4));
    const auto& b = std::get<NormalRule>(p.rules[1]).head;
    CHECK(b.args[0] == Term::integer(-2));
    REQUIRE(b.args[1].is<Function>());
    CHECK(to_string(b) == "q(-2,f(a,3))");
}

TEST_CASE("question facts are collected") {
    const Program p = parse_program("question(concl). question(prem(e)). a.");
    CHECK(p.question_atoms == std::set<Atom>{Atom("concl"), Atom("prem", {Term::constant("e")})});
    CHECK(p.rules.size() == 3);
    CHECK(question_of(p.rules[2]) == std::nullopt);
}

TEST_CASE("term order puts integers before constants") {
    CHECK(Term::integer(9) < Term::constant("a"));
    CHECK(Term::constant("a") < Term::constant("b"));
    CHECK(Atom("a", {Term::integer(2)}) < Atom("a", {Term::integer(10)}));
    CHECK(Atom("a") < Atom("b"));
}

TEST_CASE("parse errors carry a location") {
    auto location = [](std::string_view text) {
        try {
            (void)parse_program(text);
        }
        catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        FAIL("no ParseError for " << text);
        return std::pair<std::size_t, std::size_t>{};
    };
    CHECK(location("b :- w") == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(location("a.\nb :- .") == std::pair<std::size_t, std::size_t>{2, 6});
    CHECK_THROWS_AS(parse_program("a :- b,, c."), ParseError);
    CHECK_THROWS_AS(parse_program("p(3..1)."), ParseError);
    CHECK_THROWS_AS(parse_program("3{a; b}1."), ParseError);
    CHECK_THROWS_AS(parse_program("{a : not b}."), ParseError);
    CHECK_THROWS_AS(parse_program("_x."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
    CHECK_THROWS_AS(parse_atom("a."), ParseError);
    CHECK_NOTHROW(parse_program(""));
    CHECK_NOTHROW(parse_program("% only a comment"));
}

TEST_CASE("printing then parsing is the identity") {
    const char* sources[] = {
        "b :- w, not c.\n{w}.\n{s; c}.\nc :- not s.\n",
        "1{a; b; c}2 :- d, not e.\n:- a, b.\nq(f(g(1)),-3,x).\n",
        "data(1..4,b).\n{pick(M,C):data(M,C)}1 :- step(S).\nquestion(prem(e)).\n",
    };
    for (const char* s : sources) {
        const Program p = parse_program(s);
        CHECK(print_program(p) == s);
        CHECK(parse_program(print_program(p)) == p);
    }
}

TEST_CASE("parser is total on arbitrary input") {
    std::mt19937 rng(7);
    const std::string alphabet = "abX_(){};:-.,. 0123456789\n%not";
    std::uniform_int_distribution<std::size_t> len(0, 40), pick(0, alphabet.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        for (std::size_t k = len(rng); k > 0; --k)
            s += alphabet[pick(rng)];
        try {
            const Program p = parse_program(s);
            CHECK(parse_program(print_program(p)) == p);
        }
        catch (const ParseError&) {
        }
    }
}
