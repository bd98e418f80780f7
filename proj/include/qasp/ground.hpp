// SPDX-License-Identifier: MIT
#ifndef QASP_GROUND_HPP
#define QASP_GROUND_HPP

#include <qasp/syntax.hpp>

#include <set>

namespace qasp {

/// Ground terms occurring in a program, ranges expanded to their integers.
struct HerbrandUniverse {
    std::set<Term> constants;
};

[[nodiscard]] HerbrandUniverse herbrand_universe(const Program& program);

/// Throws SafetyError for the first rule with a variable that is bound
/// neither by a positive body atom nor, inside a choice element, by that
/// element's condition.
void check_safety(const Program& program);

/// Replaces every rule by its ground instances.
///
/// Ranges expand to one instance per integer. Variables range over the
/// Herbrand universe; an instance is dropped when one of its positive body
/// atoms that came from a non-ground pattern can never be derived (it lies
/// outside the fixpoint of the program read without negation and with every
/// choice element free). Choice elements expand over their local variables
/// and keep their ground condition atoms. Variable-free rules are copied
/// unchanged, so grounding a ground program is the identity.
[[nodiscard]] Program ground(const Program& program);

[[nodiscard]] bool is_ground(const Rule& rule);
[[nodiscard]] bool is_ground(const Program& program);

} // namespace qasp

#endif
