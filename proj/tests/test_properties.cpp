// SPDX-License-Identifier: MIT
//
// Randomised properties of the solver over small ground programs.
#include <qasp/ground.hpp>
#include <qasp/reason.hpp>
#include <qasp/solve.hpp>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"

using namespace qasp;

namespace {

bool strict_subset(const std::set<Atom>& a, const std::set<Atom>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("every enumerated set passes the definitional check") {
    std::mt19937 rng(101);
    for (int i = 0; i < 300; ++i) {
        const Program p = test::random_program(rng);
        for (const auto& s : enumerate_answer_sets(p))
            CHECK(is_answer_set(p, s.atoms));
    }
}

TEST_CASE("answer sets of choice-free programs form an antichain") {
    std::mt19937 rng(202);
    test::RandomProgramConfig config;
    config.choices = false;
    for (int i = 0; i < 300; ++i) {
        const auto sets = enumerate_answer_sets(test::random_program(rng, config));
        for (const auto& a : sets)
            for (const auto& b : sets)
                CHECK_FALSE(strict_subset(a.atoms, b.atoms));
    }
}

TEST_CASE("adding a constraint only removes answer sets") {
    std::mt19937 rng(303);
    for (int i = 0; i < 300; ++i) {
        Program p = test::random_program(rng);
        const auto before = test::as_sets(enumerate_answer_sets(p));
        const auto base = herbrand_base(p);
        if (base.empty())
            continue;
        auto it = base.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng));
        p.add(ConstraintRule{Body{{*it}, {}}});
        const auto after = test::as_sets(enumerate_answer_sets(p));
        CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
        for (const auto& s : after)
            CHECK_FALSE(s.count(*it));
    }
}

TEST_CASE("plausibility counts agree with filtering") {
    std::mt19937 rng(404);
    for (int i = 0; i < 200; ++i) {
        const Program p = test::random_program(rng);
        const auto sets = enumerate_answer_sets(p);
        const Atom a("a0");
        const auto r = plausibility(p, std::set<Atom>{a});
        std::uint64_t with = 0;
        for (const auto& s : sets)
            with += s.contains(a) ? 1 : 0;
        CHECK(r.total == sets.size());
        CHECK(r.numerator == with);
        CHECK(credulous(p, a) == (with > 0));
        CHECK(skeptical(p, a) == (!sets.empty() && with == sets.size()));
    }
}

TEST_CASE("strategies agree on random programs") {
    std::mt19937 rng(505);
    SolveOptions exhaustive;
    exhaustive.strategy = SearchStrategy::Exhaustive;
    for (int i = 0; i < 300; ++i) {
        const Program p = test::random_program(rng);
        CHECK(enumerate_answer_sets(p) == enumerate_answer_sets(p, exhaustive));
    }
}
