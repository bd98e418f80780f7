// SPDX-License-Identifier: MIT
//
// Counting-based reasoning over answer sets.
#ifndef QASP_REASON_HPP
#define QASP_REASON_HPP

#include <qasp/solve.hpp>
#include <qasp/syntax.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qasp {

/// Non-negative fraction in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(std::uint64_t num, std::uint64_t den);

    [[nodiscard]] std::uint64_t num() const noexcept { return num_; }
    [[nodiscard]] std::uint64_t den() const noexcept { return den_; }
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    [[nodiscard]] std::string to_string() const;

    bool operator==(const Rational&) const = default;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// round(100 * num / den), halves rounded away from zero.
[[nodiscard]] std::int64_t percent_of(std::uint64_t num, std::uint64_t den);

struct PlausibilityReport {
    std::set<Atom> question;
    std::uint64_t numerator = 0;   // |AS(P u P_Q)|
    std::uint64_t denominator = 1; // max(1, |AS(P)|)
    std::uint64_t total = 0;       // |AS(P)|
    Rational value;
    std::int64_t percent = 0;
};

struct Explanation {
    std::set<Atom> atoms;
    [[nodiscard]] std::string to_string() const;
    bool operator==(const Explanation&) const = default;
};

[[nodiscard]] std::uint64_t count_answer_sets(const Program& p, const SolveOptions& options = {});

/// `:- not a.` for every a in q.
[[nodiscard]] Program question_constraints(const std::set<Atom>& q);

/// p without its question(...) facts.
[[nodiscard]] Program strip_questions(const Program& p);

/// Ratio of answer sets in which every question atom holds. Questions come
/// from `q` when given, otherwise from the program's question facts; those
/// facts are removed before counting either side. Throws NoQuestionError
/// when neither source provides a question.
[[nodiscard]] PlausibilityReport plausibility(const Program& p, const std::optional<std::set<Atom>>& q = std::nullopt,
                                              const SolveOptions& options = {});

[[nodiscard]] bool credulous(const Program& p, const Atom& a, const SolveOptions& options = {});
/// False when p has no answer set.
[[nodiscard]] bool skeptical(const Program& p, const Atom& a, const SolveOptions& options = {});

/// Subset-minimal projections onto `abducibles` of the answer sets of
/// p u {:- not observation.}, in printed order. Throws NoModelError when
/// the observation holds in no answer set.
[[nodiscard]] std::vector<Explanation> minimal_explanations(const Program& p, const Atom& observation,
                                                            const std::set<Atom>& abducibles,
                                                            const SolveOptions& options = {});

/// Ground prem/1 and nprem/1 atoms that occur as choice elements of ground(p).
[[nodiscard]] std::set<Atom> default_abducibles(const Program& p);

} // namespace qasp

#endif
