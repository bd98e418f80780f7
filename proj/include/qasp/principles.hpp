// SPDX-License-Identifier: MIT
//
// Program fragments for the cognitive principles and the twelve
// suppression-task programs built from them.
//
// Propositions: e "she has an essay to finish", t "she has a textbook to
// read", o "the library is open". concl / nconcl stand for "she will / will
// not study late in the library". The negation of a statement p(X) is the
// separate atom np(X).
#ifndef QASP_PRINCIPLES_HPP
#define QASP_PRINCIPLES_HPP

#include <qasp/syntax.hpp>

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace qasp {

enum class PrincipleKind {
    Fact,
    Consistency,
    Hypothesis,
    Sufficient,
    Necessary,
    AllSufficient,
    Explain,
    Cautious,
    Minimal,
    Individuals,
};

[[nodiscard]] std::string_view name_of(PrincipleKind kind);

/// Schema instance for one principle.
///
///   Fact(prem(a))          prem(a).
///   Consistency()          :- concl, nconcl.
///   Hypothesis(a)          hyp(a).  {prem(X); nprem(X)}1 :- hyp(X).
///   Sufficient(a)          sufficient(a).
///   Necessary(a)           necessary(a).
///   AllSufficient(a1..an)  nconcl :- nprem(a1), ..., nprem(an).
///   Explain(o)             :- not o.
///   Cautious(e)            question(e).
///   Individuals(a)         {a}.
///   Minimal()              no rules; applied by minimal_explanations
///
/// Constants are passed as zero-arity atoms. Throws ArityError when the
/// argument count does not fit the kind.
[[nodiscard]] Program principle(PrincipleKind kind, std::span<const Atom> args = {});

/// Rules shared by every suppression-task program.
[[nodiscard]] Program basic_program();

enum class TaskCase { Essay, NotEssay, Library, NotLibrary };
enum class TaskGroup { I, II, III };

struct TaskSpec {
    TaskCase task_case = TaskCase::Essay;
    TaskGroup group = TaskGroup::I;
    bool operator==(const TaskSpec&) const = default;
};

inline constexpr std::array<TaskCase, 4> all_cases{TaskCase::Essay, TaskCase::NotEssay, TaskCase::Library,
                                                   TaskCase::NotLibrary};
inline constexpr std::array<TaskGroup, 3> all_groups{TaskGroup::I, TaskGroup::II, TaskGroup::III};

/// All twelve specs, case-major.
[[nodiscard]] std::array<TaskSpec, 12> all_task_specs();

[[nodiscard]] std::string_view name_of(TaskCase c);  // essay, not_essay, library, not_library
[[nodiscard]] std::string_view name_of(TaskGroup g); // I, II, III
[[nodiscard]] TaskCase parse_case(std::string_view name);
[[nodiscard]] TaskGroup parse_group(std::string_view name);

/// "<case>_<group>.lp", the fixture file name under tasks/suppression/.
[[nodiscard]] std::string fixture_name(const TaskSpec& spec);

/// basic_program(), then the group's shared rules, then the case rules.
[[nodiscard]] Program build_task(const TaskSpec& spec);

} // namespace qasp

#endif
