// SPDX-License-Identifier: MIT
//
// Abstract syntax of the input dialect, its parser and its printer.
//
// The dialect is the textual core of common ASP surface syntax:
//
//   a.                         fact
//   h :- b1, not c1.           normal rule
//   :- b1, not c1.             integrity constraint
//   n{ e1; ...; ek }m :- b.    choice rule, bounds and body optional
//   p(X) : q(X), r(X)          conditional choice element
//   p(1..4).                   integer range in an argument position
//   % comment                  to end of line
//
// `question(a).` facts are kept as ordinary facts and additionally
// collected into Program::question_atoms.
#ifndef QASP_SYNTAX_HPP
#define QASP_SYNTAX_HPP

#include <qasp/error.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qasp {

struct Term;

struct Constant {
    std::string name;
    auto operator<=>(const Constant&) const = default;
};

struct Integer {
    std::int64_t value = 0;
    auto operator<=>(const Integer&) const = default;
};

struct Variable {
    std::string name;
    auto operator<=>(const Variable&) const = default;
};

/// Closed integer interval lo..hi; lo <= hi.
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    auto operator<=>(const Range&) const = default;
};

/// Compound term f(t1, ..., tn), n >= 1. Needed for nested atoms such as
/// question(prem(e)).
struct Function {
    std::string name;
    std::vector<Term> args;
    bool operator==(const Function& other) const;
    std::strong_ordering operator<=>(const Function& other) const;
};

/// Alternatives are ordered so that integers sort before symbolic constants.
struct Term {
    std::variant<Integer, Constant, Function, Variable, Range> value;

    Term() = default;
    Term(Integer v) : value(v) {}
    Term(Constant v) : value(std::move(v)) {}
    Term(Function v) : value(std::move(v)) {}
    Term(Variable v) : value(std::move(v)) {}
    Term(Range v) : value(v) {}

    static Term constant(std::string name) { return Constant{std::move(name)}; }
    static Term integer(std::int64_t v) { return Integer{v}; }
    static Term variable(std::string name) { return Variable{std::move(name)}; }
    static Term range(std::int64_t lo, std::int64_t hi) { return Range{lo, hi}; }

    template <class T>
    [[nodiscard]] bool is() const noexcept { return std::holds_alternative<T>(value); }
    template <class T>
    [[nodiscard]] const T& as() const { return std::get<T>(value); }

    /// No variables and no ranges anywhere inside.
    [[nodiscard]] bool ground() const;

    bool operator==(const Term&) const = default;
    std::strong_ordering operator<=>(const Term& other) const;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    Atom() = default;
    explicit Atom(std::string pred, std::vector<Term> arguments = {})
        : predicate(std::move(pred)), args(std::move(arguments)) {}

    [[nodiscard]] std::size_t arity() const noexcept { return args.size(); }
    [[nodiscard]] bool ground() const;

    bool operator==(const Atom&) const = default;
    /// Predicate first, then arguments left to right.
    std::strong_ordering operator<=>(const Atom& other) const;
};

struct Body {
    std::vector<Atom> positive;
    std::vector<Atom> negative;

    [[nodiscard]] bool empty() const noexcept { return positive.empty() && negative.empty(); }
    bool operator==(const Body&) const = default;
};

struct ChoiceElement {
    Atom atom;
    std::vector<Atom> condition;
    bool operator==(const ChoiceElement&) const = default;
};

/// head :- body. A fact is a normal rule with an empty body.
struct NormalRule {
    Atom head;
    Body body;
    [[nodiscard]] bool is_fact() const noexcept { return body.empty(); }
    bool operator==(const NormalRule&) const = default;
};

struct ConstraintRule {
    Body body;
    bool operator==(const ConstraintRule&) const = default;
};

struct ChoiceRule {
    std::vector<ChoiceElement> elements;
    std::optional<std::uint32_t> lower;
    std::optional<std::uint32_t> upper;
    Body body;
    bool operator==(const ChoiceRule&) const = default;
};

using Rule = std::variant<NormalRule, ConstraintRule, ChoiceRule>;

[[nodiscard]] const Body& body_of(const Rule& rule);

struct Program {
    std::vector<Rule> rules;
    /// Arguments of the `question(...)` facts among `rules`.
    std::set<Atom> question_atoms;

    Program() = default;
    explicit Program(std::vector<Rule> rs);

    /// Appends the rules of `other`, re-harvesting question facts.
    Program& append(const Program& other);
    void add(Rule rule);

    bool operator==(const Program&) const = default;
};

/// Name of the reserved predicate whose facts declare plausibility questions.
inline constexpr std::string_view question_predicate = "question";

/// question(t). with t a symbolic ground term yields the atom t.
[[nodiscard]] std::optional<Atom> question_of(const Rule& rule);

[[nodiscard]] Program parse_program(std::string_view text);
/// Parses one atom, e.g. a command-line `--question prem(e)`.
[[nodiscard]] Atom parse_atom(std::string_view text);

[[nodiscard]] std::string to_string(const Term& term);
[[nodiscard]] std::string to_string(const Atom& atom);
[[nodiscard]] std::string to_string(const Rule& rule);
/// One rule per line, each line terminated by '\n'.
[[nodiscard]] std::string print_program(const Program& program);

} // namespace qasp

#endif
