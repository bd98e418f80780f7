// SPDX-License-Identifier: MIT
//
// Stable-model semantics for ground programs.
//
// A set M of atoms is an answer set of P when M is a model of P and M is
// the least model of the reduct P^M. The reduct keeps `h :- B+` for every
// normal rule whose negative body is disjoint from M, and `a :- B+, cond(a)`
// for every element atom a in M of a choice rule whose negative body is
// disjoint from M and whose condition holds in M. Integrity constraints
// and cardinality bounds are checked on the model only.
#ifndef QASP_SOLVE_HPP
#define QASP_SOLVE_HPP

#include <qasp/syntax.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qasp {

using Interpretation = std::set<Atom>;

struct AnswerSet {
    std::set<Atom> atoms;

    /// Atoms in order, separated by single spaces; "" for the empty set.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool contains(const Atom& a) const { return atoms.count(a) != 0; }

    bool operator==(const AnswerSet&) const = default;
};

/// Order used for every enumeration result.
[[nodiscard]] bool printed_less(const AnswerSet& lhs, const AnswerSet& rhs);

struct PositiveRule {
    Atom head;
    std::vector<Atom> body;
    bool operator==(const PositiveRule&) const = default;
};

struct Reduct {
    std::vector<PositiveRule> rules;
};

/// All atoms occurring in a ground program.
[[nodiscard]] std::set<Atom> herbrand_base(const Program& ground_program);

/// Classical satisfaction of every rule, with cardinality bounds for choice
/// rules whose body holds. Atoms of `m` outside the program are ignored.
[[nodiscard]] bool satisfies(const Interpretation& m, const Program& ground_program);
[[nodiscard]] Reduct gl_reduct(const Program& ground_program, const Interpretation& m);
/// Least fixpoint of the one-step consequence operator, starting from the empty set.
[[nodiscard]] Interpretation least_model(const Reduct& reduct);
[[nodiscard]] bool is_answer_set(const Program& ground_program, const Interpretation& m);

enum class SearchStrategy {
    /// Branch on choice and negated atoms, bound the candidate model from
    /// both sides with definite rules, check stability at every leaf.
    Propagate,
    /// Try every truth assignment to choice and negated atoms. Limited by
    /// SolveOptions::max_atoms.
    Exhaustive,
};

struct SolveOptions {
    std::optional<std::size_t> limit;
    SearchStrategy strategy = SearchStrategy::Propagate;
    /// Largest Herbrand base the exhaustive strategy accepts.
    std::size_t max_atoms = 64;
};

/// Answer sets of ground(p), sorted by printed form, truncated to
/// options.limit. Throws ValidationError for a normal rule whose head also
/// occurs in its body and ResourceError when the exhaustive budget is exceeded.
[[nodiscard]] std::vector<AnswerSet> enumerate_answer_sets(const Program& p, const SolveOptions& options = {});

/// Reference enumeration: filters all 2^n subsets of the Herbrand base.
inline constexpr std::size_t brute_force_max_atoms = 20;
[[nodiscard]] std::vector<AnswerSet> brute_force_answer_sets(const Program& ground_program);

} // namespace qasp

#endif
