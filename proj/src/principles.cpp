// SPDX-License-Identifier: MIT
#include <qasp/principles.hpp>

#include <stdexcept>

namespace qasp {

namespace {

Atom atom(std::string pred, std::vector<Term> args = {}) { return Atom(std::move(pred), std::move(args)); }

Atom unary(std::string pred, const Atom& constant) { return atom(std::move(pred), {Term::constant(constant.predicate)}); }

Atom unary_var(std::string pred) { return atom(std::move(pred), {Term::variable("X")}); }

NormalRule fact(Atom a) { return NormalRule{std::move(a), {}}; }

void require_constant(PrincipleKind kind, const Atom& a) {
    if (a.arity() != 0)
        throw ArityError(std::string(name_of(kind)) + " expects constants, got " + to_string(a));
}

void require_count(PrincipleKind kind, std::span<const Atom> args, std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
        throw ArityError(std::string(name_of(kind)) + " takes " +
                         (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") + " argument(s), got " +
                         std::to_string(args.size()));
}

// {prem(X); nprem(X)}1 :- hyp(X).
ChoiceRule hypothesis_schema() {
    return ChoiceRule{{{unary_var("prem"), {}}, {unary_var("nprem"), {}}}, std::nullopt, 1, Body{{unary_var("hyp")}, {}}};
}

// concl :- prem(X), sufficient(X).
NormalRule sufficient_schema() {
    return NormalRule{atom("concl"), Body{{unary_var("prem"), unary_var("sufficient")}, {}}};
}

// nconcl :- nprem(X), necessary(X).
NormalRule necessary_schema() {
    return NormalRule{atom("nconcl"), Body{{unary_var("nprem"), unary_var("necessary")}, {}}};
}

Program individuals(std::initializer_list<Atom> atoms, std::optional<std::uint32_t> upper = std::nullopt) {
    ChoiceRule c;
    for (const auto& a : atoms)
        c.elements.push_back(ChoiceElement{a, {}});
    c.upper = upper;
    return Program({c});
}

Program facts(std::initializer_list<Atom> atoms) {
    Program p;
    for (const auto& a : atoms)
        p.add(fact(a));
    return p;
}

const Atom e = atom("e");
const Atom t = atom("t");
const Atom o = atom("o");

Program p(PrincipleKind kind, std::initializer_list<Atom> args) {
    const std::vector<Atom> v(args);
    return principle(kind, v);
}

Program group_rules(TaskGroup g) {
    switch (g) {
        case TaskGroup::I: return p(PrincipleKind::Individuals, {unary("necessary", e)});
        case TaskGroup::II: return {};
        case TaskGroup::III: return p(PrincipleKind::Necessary, {e});
    }
    return {};
}

Program case_rules(const TaskSpec& spec) {
    Program out;
    const Atom concl = atom("concl");
    const Atom nconcl = atom("nconcl");
    switch (spec.task_case) {
        case TaskCase::Essay:
            out.append(p(PrincipleKind::Cautious, {concl}));
            switch (spec.group) {
                case TaskGroup::I: out.append(p(PrincipleKind::Fact, {unary("prem", e)})); break;
                case TaskGroup::II:
                    out.append(p(PrincipleKind::Fact, {unary("prem", e)}));
                    out.append(individuals({unary("hyp", t)}));
                    break;
                case TaskGroup::III: out.append(individuals({unary("hyp", o), unary("prem", e)})); break;
            }
            break;
        case TaskCase::NotEssay:
            out.append(p(PrincipleKind::Cautious, {nconcl}));
            switch (spec.group) {
                case TaskGroup::I: out.append(p(PrincipleKind::Fact, {unary("nprem", e)})); break;
                case TaskGroup::II:
                    out.append(p(PrincipleKind::Fact, {unary("nprem", e)}));
                    out.append(individuals({unary("hyp", t)}));
                    break;
                case TaskGroup::III: out.append(individuals({unary("hyp", o), unary("nprem", e)})); break;
            }
            break;
        case TaskCase::Library:
            out.append(p(PrincipleKind::Individuals, {concl}));
            out.append(p(PrincipleKind::Explain, {concl}));
            out.append(p(PrincipleKind::Cautious, {unary("prem", e)}));
            switch (spec.group) {
                case TaskGroup::I: out.append(facts({unary("hyp", e)})); break;
                case TaskGroup::II: out.append(individuals({unary("hyp", e), unary("hyp", t)}, 1)); break;
                case TaskGroup::III: out.append(facts({unary("hyp", o), unary("hyp", e)})); break;
            }
            break;
        case TaskCase::NotLibrary:
            out.append(p(PrincipleKind::Explain, {nconcl}));
            out.append(p(PrincipleKind::Cautious, {unary("nprem", e)}));
            switch (spec.group) {
                case TaskGroup::I: out.append(facts({unary("hyp", e)})); break;
                case TaskGroup::II: out.append(facts({unary("hyp", e), unary("hyp", t)})); break;
                case TaskGroup::III: out.append(individuals({unary("hyp", o), unary("hyp", e)}, 1)); break;
            }
            break;
    }
    return out;
}

} // namespace

std::string_view name_of(PrincipleKind kind) {
    switch (kind) {
        case PrincipleKind::Fact: return "fact";
        case PrincipleKind::Consistency: return "consistency";
        case PrincipleKind::Hypothesis: return "hypothesis";
        case PrincipleKind::Sufficient: return "sufficient";
        case PrincipleKind::Necessary: return "necessary";
        case PrincipleKind::AllSufficient: return "all-sufficient";
        case PrincipleKind::Explain: return "explain";
        case PrincipleKind::Cautious: return "cautious";
        case PrincipleKind::Minimal: return "minimal";
        case PrincipleKind::Individuals: return "individuals";
    }
    return "?";
}

Program principle(PrincipleKind kind, std::span<const Atom> args) {
    Program out;
    switch (kind) {
        case PrincipleKind::Fact:
            require_count(kind, args, 1, 1);
            out.add(fact(args[0]));
            break;
        case PrincipleKind::Consistency:
            require_count(kind, args, 0, 0);
            out.add(ConstraintRule{Body{{atom("concl"), atom("nconcl")}, {}}});
            break;
        case PrincipleKind::Hypothesis:
            require_count(kind, args, 1, 1);
            require_constant(kind, args[0]);
            out.add(fact(unary("hyp", args[0])));
            out.add(hypothesis_schema());
            break;
        case PrincipleKind::Sufficient:
        case PrincipleKind::Necessary:
            require_count(kind, args, 1, 1);
            require_constant(kind, args[0]);
            out.add(fact(unary(kind == PrincipleKind::Sufficient ? "sufficient" : "necessary", args[0])));
            break;
        case PrincipleKind::AllSufficient: {
            require_count(kind, args, 1, static_cast<std::size_t>(-1));
            NormalRule r{atom("nconcl"), {}};
            for (const auto& a : args) {
                require_constant(kind, a);
                r.body.positive.push_back(unary("nprem", a));
            }
            out.add(std::move(r));
            break;
        }
        case PrincipleKind::Explain:
            require_count(kind, args, 1, 1);
            out.add(ConstraintRule{Body{{}, {args[0]}}});
            break;
        case PrincipleKind::Cautious: {
            require_count(kind, args, 1, 1);
            const Atom& a = args[0];
            Term arg = a.args.empty() ? Term::constant(a.predicate) : Term(Function{a.predicate, a.args});
            out.add(fact(atom(std::string(question_predicate), {std::move(arg)})));
            break;
        }
        case PrincipleKind::Minimal: require_count(kind, args, 0, 0); break;
        case PrincipleKind::Individuals: {
            require_count(kind, args, 1, static_cast<std::size_t>(-1));
            ChoiceRule c;
            for (const auto& a : args)
                c.elements.push_back(ChoiceElement{a, {}});
            out.add(std::move(c));
            break;
        }
    }
    return out;
}

Program basic_program() {
    Program out = p(PrincipleKind::Consistency, {});
    out.add(sufficient_schema());
    out.add(necessary_schema());
    out.add(hypothesis_schema());
    out.append(p(PrincipleKind::AllSufficient, {e, t}));
    out.append(p(PrincipleKind::Sufficient, {e}));
    out.append(p(PrincipleKind::Sufficient, {t}));
    out.append(p(PrincipleKind::Necessary, {o}));
    return out;
}

std::array<TaskSpec, 12> all_task_specs() {
    std::array<TaskSpec, 12> out{};
    std::size_t i = 0;
    for (auto c : all_cases)
        for (auto g : all_groups)
            out[i++] = TaskSpec{c, g};
    return out;
}

std::string_view name_of(TaskCase c) {
    switch (c) {
        case TaskCase::Essay: return "essay";
        case TaskCase::NotEssay: return "not_essay";
        case TaskCase::Library: return "library";
        case TaskCase::NotLibrary: return "not_library";
    }
    return "?";
}

std::string_view name_of(TaskGroup g) {
    switch (g) {
        case TaskGroup::I: return "I";
        case TaskGroup::II: return "II";
        case TaskGroup::III: return "III";
    }
    return "?";
}

TaskCase parse_case(std::string_view name) {
    for (auto c : all_cases)
        if (name_of(c) == name)
            return c;
    throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

TaskGroup parse_group(std::string_view name) {
    for (auto g : all_groups)
        if (name_of(g) == name)
            return g;
    throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

std::string fixture_name(const TaskSpec& spec) {
    return std::string(name_of(spec.task_case)) + "_" + std::string(name_of(spec.group)) + ".lp";
}

Program build_task(const TaskSpec& spec) {
    Program out = basic_program();
    out.append(group_rules(spec.group));
    out.append(case_rules(spec));
    return out;
}

} // namespace qasp
