// SPDX-License-Identifier: MIT
#include <qasp/ground.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace qasp {

namespace {

using Binding = std::map<std::string, Term>;

// ---------------------------------------------------------------------------
// Variables

void collect_vars(const Term& t, std::set<std::string>& out) {
    if (t.is<Variable>())
        out.insert(t.as<Variable>().name);
    else if (t.is<Function>())
        for (const auto& a : t.as<Function>().args)
            collect_vars(a, out);
}

void collect_vars(const Atom& a, std::set<std::string>& out) {
    for (const auto& t : a.args)
        collect_vars(t, out);
}

void collect_vars(const std::vector<Atom>& as, std::set<std::string>& out) {
    for (const auto& a : as)
        collect_vars(a, out);
}

std::set<std::string> vars_of(const std::vector<Atom>& as) {
    std::set<std::string> out;
    collect_vars(as, out);
    return out;
}

std::optional<std::string> first_unbound(const std::set<std::string>& used, const std::set<std::string>& bound) {
    for (const auto& v : used)
        if (!bound.count(v))
            return v;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ranges

Term* find_range(Term& t) {
    if (t.is<Range>())
        return &t;
    if (t.is<Function>())
        for (auto& a : std::get<Function>(t.value).args)
            if (Term* r = find_range(a))
                return r;
    return nullptr;
}

Term* find_range(Atom& a) {
    for (auto& t : a.args)
        if (Term* r = find_range(t))
            return r;
    return nullptr;
}

Term* find_range(std::vector<Atom>& as) {
    for (auto& a : as)
        if (Term* r = find_range(a))
            return r;
    return nullptr;
}

// Ranges in rule-level positions (head of a normal rule, bodies).
Term* find_rule_range(Rule& rule) {
    return std::visit(
        [](auto& r) -> Term* {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, NormalRule>)
                if (Term* t = find_range(r.head))
                    return t;
            if (Term* t = find_range(r.body.positive))
                return t;
            return find_range(r.body.negative);
        },
        rule);
}

Term* find_element_range(ChoiceElement& e) {
    if (Term* t = find_range(e.atom))
        return t;
    return find_range(e.condition);
}

// Calls `emit` with each copy of `item` in which every range located by
// `locate` has been replaced by one of its integers.
template <class T, class Locate, class Emit>
void expand_ranges(const T& item, Locate locate, Emit&& emit) {
    T copy = item;
    Term* slot = locate(copy);
    if (!slot) {
        emit(std::move(copy));
        return;
    }
    const Range r = slot->as<Range>();
    for (std::int64_t v = r.lo;; ++v) {
        *slot = Term::integer(v);
        expand_ranges(copy, locate, emit);
        if (v == r.hi)
            break;
    }
}

std::vector<Rule> expand_rule_ranges(const Rule& rule) {
    std::vector<Rule> out;
    expand_ranges(rule, [](Rule& r) { return find_rule_range(r); }, [&](Rule r) {
        if (auto* c = std::get_if<ChoiceRule>(&r)) {
            std::vector<ChoiceElement> elements;
            for (const auto& e : c->elements)
                expand_ranges(e, [](ChoiceElement& x) { return find_element_range(x); },
                              [&](ChoiceElement x) { elements.push_back(std::move(x)); });
            c->elements = std::move(elements);
        }
        out.push_back(std::move(r));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Matching and substitution

bool match(const Term& pattern, const Term& value, Binding& b) {
    if (pattern.is<Variable>()) {
        const auto& name = pattern.as<Variable>().name;
        auto [it, inserted] = b.emplace(name, value);
        return inserted || it->second == value;
    }
    if (pattern.is<Function>()) {
        if (!value.is<Function>())
            return false;
        const auto& pf = pattern.as<Function>();
        const auto& vf = value.as<Function>();
        if (pf.name != vf.name || pf.args.size() != vf.args.size())
            return false;
        for (std::size_t i = 0; i < pf.args.size(); ++i)
            if (!match(pf.args[i], vf.args[i], b))
                return false;
        return true;
    }
    return pattern == value;
}

bool match(const Atom& pattern, const Atom& value, Binding& b) {
    if (pattern.predicate != value.predicate || pattern.arity() != value.arity())
        return false;
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
        if (!match(pattern.args[i], value.args[i], b))
            return false;
    return true;
}

Term substitute(const Term& t, const Binding& b) {
    if (t.is<Variable>())
        return b.at(t.as<Variable>().name);
    if (t.is<Function>()) {
        Function f{t.as<Function>().name, {}};
        for (const auto& a : t.as<Function>().args)
            f.args.push_back(substitute(a, b));
        return f;
    }
    return t;
}

Atom substitute(const Atom& a, const Binding& b) {
    Atom out(a.predicate);
    out.args.reserve(a.args.size());
    for (const auto& t : a.args)
        out.args.push_back(substitute(t, b));
    return out;
}

std::vector<Atom> substitute(const std::vector<Atom>& as, const Binding& b) {
    std::vector<Atom> out;
    out.reserve(as.size());
    for (const auto& a : as)
        out.push_back(substitute(a, b));
    return out;
}

// ---------------------------------------------------------------------------
// Instantiation

// Over-approximation of the derivable atoms, indexed by predicate and arity.
class AtomIndex {
public:
    bool insert(const Atom& a) {
        auto& bucket = by_signature_[{a.predicate, a.arity()}];
        return bucket.insert(a).second;
    }
    [[nodiscard]] const std::set<Atom>& candidates(const Atom& pattern) const {
        static const std::set<Atom> empty;
        auto it = by_signature_.find({pattern.predicate, pattern.arity()});
        return it == by_signature_.end() ? empty : it->second;
    }

private:
    std::map<std::pair<std::string, std::size_t>, std::set<Atom>> by_signature_;
};

// Enumerates the bindings that extend `b` and make every atom of
// `patterns[i..]` an element of `index`. Ground patterns pass through
// without being looked up.
void join(const std::vector<Atom>& patterns, std::size_t i, Binding& b, const AtomIndex& index,
          const std::function<void(const Binding&)>& emit) {
    if (i == patterns.size()) {
        emit(b);
        return;
    }
    const Atom& p = patterns[i];
    if (p.ground()) {
        join(patterns, i + 1, b, index, emit);
        return;
    }
    for (const auto& candidate : index.candidates(p)) {
        Binding next = b;
        if (match(p, candidate, next))
            join(patterns, i + 1, next, index, emit);
    }
}

struct Instantiator {
    const AtomIndex& possible;

    // Ground instances of `rule` whose non-ground positive patterns match `possible`.
    void instantiate(const Rule& rule, const std::function<void(Rule)>& emit) const {
        const Body& body = body_of(rule);
        Binding empty;
        join(body.positive, 0, empty, possible, [&](const Binding& b) {
            Body gb{substitute(body.positive, b), substitute(body.negative, b)};
            std::visit(
                [&](const auto& r) {
                    using T = std::decay_t<decltype(r)>;
                    if constexpr (std::is_same_v<T, NormalRule>)
                        emit(NormalRule{substitute(r.head, b), std::move(gb)});
                    else if constexpr (std::is_same_v<T, ConstraintRule>)
                        emit(ConstraintRule{std::move(gb)});
                    else {
                        ChoiceRule out{{}, r.lower, r.upper, std::move(gb)};
                        std::set<std::string> seen;
                        for (const auto& e : r.elements) {
                            Binding local = b;
                            join(e.condition, 0, local, possible, [&](const Binding& lb) {
                                ChoiceElement ge{substitute(e.atom, lb), substitute(e.condition, lb)};
                                std::string key = to_string(ge.atom);
                                for (const auto& c : ge.condition)
                                    key += " " + to_string(c);
                                if (seen.insert(key).second)
                                    out.elements.push_back(std::move(ge));
                            });
                        }
                        emit(std::move(out));
                    }
                },
                rule);
        });
    }
};

void record_heads(const Rule& ground_rule, AtomIndex& possible, bool& changed) {
    if (const auto* n = std::get_if<NormalRule>(&ground_rule))
        changed |= possible.insert(n->head);
    else if (const auto* c = std::get_if<ChoiceRule>(&ground_rule))
        for (const auto& e : c->elements)
            changed |= possible.insert(e.atom);
}

bool positive_body_possible(const Rule& ground_rule, const AtomIndex& possible) {
    for (const auto& a : body_of(ground_rule).positive)
        if (!possible.candidates(a).count(a))
            return false;
    return true;
}

void collect_terms(const Term& t, std::set<Term>& out) {
    if (t.ground())
        out.insert(t);
    if (t.is<Function>())
        for (const auto& a : t.as<Function>().args)
            collect_terms(a, out);
}

void collect_terms(const std::vector<Atom>& as, std::set<Term>& out) {
    for (const auto& a : as)
        for (const auto& t : a.args)
            collect_terms(t, out);
}

} // namespace

bool is_ground(const Rule& rule) {
    auto all = [](const std::vector<Atom>& as) {
        return std::all_of(as.begin(), as.end(), [](const Atom& a) { return a.ground(); });
    };
    const Body& b = body_of(rule);
    if (!all(b.positive) || !all(b.negative))
        return false;
    if (const auto* n = std::get_if<NormalRule>(&rule))
        return n->head.ground();
    if (const auto* c = std::get_if<ChoiceRule>(&rule))
        return std::all_of(c->elements.begin(), c->elements.end(),
                           [&](const ChoiceElement& e) { return e.atom.ground() && all(e.condition); });
    return true;
}

bool is_ground(const Program& program) {
    return std::all_of(program.rules.begin(), program.rules.end(), [](const Rule& r) { return is_ground(r); });
}

HerbrandUniverse herbrand_universe(const Program& program) {
    HerbrandUniverse u;
    for (const auto& rule : program.rules)
        for (const auto& r : expand_rule_ranges(rule)) {
            const Body& b = body_of(r);
            collect_terms(b.positive, u.constants);
            collect_terms(b.negative, u.constants);
            if (const auto* n = std::get_if<NormalRule>(&r))
                collect_terms({n->head}, u.constants);
            else if (const auto* c = std::get_if<ChoiceRule>(&r))
                for (const auto& e : c->elements) {
                    collect_terms({e.atom}, u.constants);
                    collect_terms(e.condition, u.constants);
                }
        }
    return u;
}

void check_safety(const Program& program) {
    for (const auto& rule : program.rules) {
        const Body& body = body_of(rule);
        const auto bound = vars_of(body.positive);
        std::set<std::string> used = vars_of(body.negative);
        if (const auto* n = std::get_if<NormalRule>(&rule))
            collect_vars(n->head, used);
        if (auto v = first_unbound(used, bound))
            throw SafetyError(to_string(rule), *v);
        if (const auto* c = std::get_if<ChoiceRule>(&rule)) {
            for (const auto& e : c->elements) {
                auto local_bound = bound;
                collect_vars(e.condition, local_bound);
                std::set<std::string> in_atom;
                collect_vars(e.atom, in_atom);
                if (auto v = first_unbound(in_atom, local_bound))
                    throw SafetyError(to_string(rule), *v);
            }
        }
    }
}

Program ground(const Program& program) {
    check_safety(program);

    // Range expansion, keeping track of which rules still need instantiation.
    std::vector<Rule> fixed;
    std::vector<Rule> open;
    for (const auto& rule : program.rules) {
        if (is_ground(rule)) {
            fixed.push_back(rule);
            continue;
        }
        for (auto& r : expand_rule_ranges(rule))
            (is_ground(r) ? fixed : open).push_back(std::move(r));
    }

    AtomIndex possible;
    const Instantiator inst{possible};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : fixed)
            if (positive_body_possible(r, possible))
                record_heads(r, possible, changed);
        for (const auto& r : open)
            inst.instantiate(r, [&](Rule g) { record_heads(g, possible, changed); });
    }

    // Emit in source order: each input rule is replaced by its instances.
    Program out;
    for (const auto& rule : program.rules) {
        if (is_ground(rule)) {
            out.add(rule);
            continue;
        }
        std::set<std::string> seen;
        for (const auto& r : expand_rule_ranges(rule)) {
            if (is_ground(r)) {
                out.add(r);
                continue;
            }
            inst.instantiate(r, [&](Rule g) {
                if (seen.insert(to_string(g)).second)
                    out.add(std::move(g));
            });
        }
    }
    return out;
}

} // namespace qasp
