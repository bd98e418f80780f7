// SPDX-License-Identifier: MIT
#include <qasp/solve.hpp>

#include <qasp/ground.hpp>

#include <algorithm>
#include <cstdint>
#include <map>

namespace qasp {

namespace {

using AtomId = std::uint32_t;
using Bits = std::vector<char>;

struct CNormal {
    std::optional<AtomId> head; // empty for integrity constraints
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
};

struct CElement {
    AtomId atom;
    std::vector<AtomId> cond;
};

struct CChoice {
    std::vector<CElement> elements;
    std::optional<std::uint32_t> lower;
    std::optional<std::uint32_t> upper;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    std::size_t distinct = 0; // number of distinct element atoms
};

struct CRule {
    AtomId head;
    std::vector<AtomId> body;
};

// Ground program over dense atom ids; ids follow atom order.
class Compiled {
public:
    explicit Compiled(const Program& p) {
        if (!is_ground(p))
            throw ValidationError("program is not ground");
        for (const auto& a : herbrand_base(p)) {
            ids_.emplace(a, static_cast<AtomId>(atoms_.size()));
            atoms_.push_back(a);
        }
        for (const auto& rule : p.rules)
            std::visit([this](const auto& r) { add(r); }, rule);
    }

    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
    [[nodiscard]] const Atom& atom(AtomId id) const { return atoms_[id]; }
    [[nodiscard]] std::optional<AtomId> find(const Atom& a) const {
        auto it = ids_.find(a);
        return it == ids_.end() ? std::nullopt : std::optional<AtomId>(it->second);
    }

    std::vector<CNormal> normals;
    std::vector<CChoice> choices;

    [[nodiscard]] std::optional<Bits> to_bits(const Interpretation& m) const {
        Bits bits(size(), 0);
        for (const auto& a : m) {
            auto id = find(a);
            if (!id)
                return std::nullopt;
            bits[*id] = 1;
        }
        return bits;
    }

    [[nodiscard]] Interpretation to_set(const Bits& bits) const {
        Interpretation out;
        for (AtomId i = 0; i < bits.size(); ++i)
            if (bits[i])
                out.insert(atoms_[i]);
        return out;
    }

private:
    std::vector<AtomId> ids_of(const std::vector<Atom>& as) const {
        std::vector<AtomId> out;
        out.reserve(as.size());
        for (const auto& a : as)
            out.push_back(ids_.at(a));
        return out;
    }

    void add(const NormalRule& r) {
        CNormal c{ids_.at(r.head), ids_of(r.body.positive), ids_of(r.body.negative)};
        auto in = [&](const std::vector<AtomId>& v) { return std::find(v.begin(), v.end(), *c.head) != v.end(); };
        if (in(c.pos) || in(c.neg))
            throw ValidationError("head atom " + qasp::to_string(r.head) +
                                  " also occurs in the body of rule: " + qasp::to_string(Rule{r}));
        normals.push_back(std::move(c));
    }

    void add(const ConstraintRule& r) {
        normals.push_back(CNormal{std::nullopt, ids_of(r.body.positive), ids_of(r.body.negative)});
    }

    void add(const ChoiceRule& r) {
        CChoice c{{}, r.lower, r.upper, ids_of(r.body.positive), ids_of(r.body.negative)};
        std::set<AtomId> distinct;
        for (const auto& e : r.elements) {
            c.elements.push_back(CElement{ids_.at(e.atom), ids_of(e.condition)});
            distinct.insert(c.elements.back().atom);
        }
        c.distinct = distinct.size();
        choices.push_back(std::move(c));
    }

    std::vector<Atom> atoms_;
    std::map<Atom, AtomId> ids_;
};

bool all_in(const std::vector<AtomId>& ids, const Bits& m) {
    return std::all_of(ids.begin(), ids.end(), [&](AtomId a) { return m[a] != 0; });
}

bool none_in(const std::vector<AtomId>& ids, const Bits& m) {
    return std::none_of(ids.begin(), ids.end(), [&](AtomId a) { return m[a] != 0; });
}

// Distinct element atoms in m whose condition holds in m.
std::size_t chosen_count(const CChoice& c, const Bits& m) {
    std::set<AtomId> chosen;
    for (const auto& e : c.elements)
        if (m[e.atom] && all_in(e.cond, m))
            chosen.insert(e.atom);
    return chosen.size();
}

bool within_bounds(const CChoice& c, std::size_t k) {
    return k >= c.lower.value_or(0) && k <= c.upper.value_or(static_cast<std::uint32_t>(c.distinct));
}

// ---------------------------------------------------------------------------
// Definitional checks on dense interpretations

bool satisfies(const Compiled& p, const Bits& m) {
    for (const auto& r : p.normals) {
        if (all_in(r.pos, m) && none_in(r.neg, m) && !(r.head && m[*r.head]))
            return false;
    }
    for (const auto& c : p.choices) {
        if (all_in(c.pos, m) && none_in(c.neg, m) && !within_bounds(c, chosen_count(c, m)))
            return false;
    }
    return true;
}

std::vector<CRule> reduct(const Compiled& p, const Bits& m) {
    std::vector<CRule> out;
    for (const auto& r : p.normals)
        if (r.head && none_in(r.neg, m))
            out.push_back(CRule{*r.head, r.pos});
    for (const auto& c : p.choices) {
        if (!none_in(c.neg, m))
            continue;
        for (const auto& e : c.elements) {
            if (!m[e.atom] || !all_in(e.cond, m))
                continue;
            CRule r{e.atom, c.pos};
            r.body.insert(r.body.end(), e.cond.begin(), e.cond.end());
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Counter-based fixpoint over the rules selected by `active`.
class FixpointEngine {
public:
    FixpointEngine(std::size_t atom_count, std::vector<CRule> rules)
        : rules_(std::move(rules)), watches_(atom_count), missing_(rules_.size()) {
        for (std::size_t i = 0; i < rules_.size(); ++i)
            for (AtomId a : rules_[i].body)
                watches_[a].push_back(i);
    }

    template <class Active>
    void run(const Active& active, Bits& out) {
        std::fill(out.begin(), out.end(), 0);
        stack_.clear();
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            missing_[i] = active(i) ? rules_[i].body.size() : kInactive;
            if (missing_[i] == 0)
                derive(rules_[i].head, out);
        }
        while (!stack_.empty()) {
            const AtomId a = stack_.back();
            stack_.pop_back();
            for (std::size_t i : watches_[a]) {
                if (missing_[i] == kInactive)
                    continue;
                // Duplicate body atoms are counted once per occurrence.
                if (--missing_[i] == 0)
                    derive(rules_[i].head, out);
            }
        }
    }

private:
    static constexpr std::size_t kInactive = static_cast<std::size_t>(-1);

    void derive(AtomId a, Bits& out) {
        if (!out[a]) {
            out[a] = 1;
            stack_.push_back(a);
        }
    }

    std::vector<CRule> rules_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<std::size_t> missing_;
    std::vector<AtomId> stack_;
};

Bits least_model(std::size_t atom_count, std::vector<CRule> rules) {
    FixpointEngine engine(atom_count, std::move(rules));
    Bits out(atom_count, 0);
    engine.run([](std::size_t) { return true; }, out);
    return out;
}

bool is_answer_set(const Compiled& p, const Bits& m) {
    return satisfies(p, m) && least_model(p.size(), reduct(p, m)) == m;
}

// ---------------------------------------------------------------------------
// Search

// Candidate models are determined by the truth values of the guess atoms:
// atoms under default negation and choice element atoms. Every potential
// reduct rule is stored once together with the guess atoms that switch it
// on or off.
class Search {
public:
    explicit Search(const Compiled& p) : p_(p), engine_(p.size(), pool(p)), value_(p.size(), kFree) {
        is_guess_.assign(p.size(), 0);
        for (const auto& r : p.normals)
            for (AtomId a : r.neg)
                is_guess_[a] = 1;
        for (const auto& c : p.choices) {
            for (AtomId a : c.neg)
                is_guess_[a] = 1;
            for (const auto& e : c.elements)
                is_guess_[e.atom] = 1;
        }
        for (AtomId a = 0; a < p.size(); ++a)
            if (is_guess_[a])
                guesses_.push_back(a);
        lower_.assign(p.size(), 0);
        upper_.assign(p.size(), 0);
    }

    [[nodiscard]] std::size_t guess_count() const noexcept { return guesses_.size(); }

    std::vector<Bits> propagate_all() {
        results_.clear();
        branch();
        return std::move(results_);
    }

    std::vector<Bits> exhaustive_all() {
        results_.clear();
        const std::size_t g = guesses_.size();
        for (std::uint64_t mask = 0;; ++mask) {
            for (std::size_t i = 0; i < g; ++i)
                value_[guesses_[i]] = static_cast<std::int8_t>((mask >> i) & 1u);
            bounds();
            if (consistent_leaf())
                accept(lower_);
            if (g == 0 || mask == (std::uint64_t{1} << g) - 1)
                break;
        }
        return std::move(results_);
    }

private:
    static constexpr std::int8_t kFree = -1;

    static std::vector<CRule> pool(const Compiled& p) {
        std::vector<CRule> rules;
        for (const auto& r : p.normals)
            if (r.head)
                rules.push_back(CRule{*r.head, r.pos});
        for (const auto& c : p.choices)
            for (const auto& e : c.elements) {
                CRule r{e.atom, c.pos};
                r.body.insert(r.body.end(), e.cond.begin(), e.cond.end());
                rules.push_back(std::move(r));
            }
        return rules;
    }

    [[nodiscard]] bool neg_all_false(const std::vector<AtomId>& neg) const {
        return std::all_of(neg.begin(), neg.end(), [&](AtomId a) { return value_[a] == 0; });
    }
    [[nodiscard]] bool neg_none_true(const std::vector<AtomId>& neg) const {
        return std::none_of(neg.begin(), neg.end(), [&](AtomId a) { return value_[a] == 1; });
    }

    // lower_ is contained in, and upper_ contains, the least model of the
    // reduct of every completion of the current assignment.
    void bounds() {
        if (active_index_.empty())
            build_active_index();
        engine_.run([&](std::size_t i) { return active(i, false); }, lower_);
        engine_.run([&](std::size_t i) { return active(i, true); }, upper_);
    }

    // Rule i of the pool is either normal rule `owner` or element `element`
    // of choice `owner`.
    struct PoolEntry {
        bool choice;
        std::size_t owner;
        std::size_t element;
    };

    void build_active_index() {
        for (std::size_t i = 0; i < p_.normals.size(); ++i)
            if (p_.normals[i].head)
                active_index_.push_back(PoolEntry{false, i, 0});
        for (std::size_t i = 0; i < p_.choices.size(); ++i)
            for (std::size_t j = 0; j < p_.choices[i].elements.size(); ++j)
                active_index_.push_back(PoolEntry{true, i, j});
    }

    [[nodiscard]] bool active(std::size_t i, bool optimistic) const {
        const PoolEntry& e = active_index_[i];
        if (!e.choice) {
            const auto& neg = p_.normals[e.owner].neg;
            return optimistic ? neg_none_true(neg) : neg_all_false(neg);
        }
        const CChoice& c = p_.choices[e.owner];
        const AtomId a = c.elements[e.element].atom;
        return optimistic ? (neg_none_true(c.neg) && value_[a] != 0) : (neg_all_false(c.neg) && value_[a] == 1);
    }

    // Tightens the assignment from the bounds; false on conflict.
    bool propagate(std::vector<AtomId>& trail) {
        for (bool changed = true; changed;) {
            changed = false;
            bounds();
            for (AtomId g : guesses_) {
                if (value_[g] == 1 && !upper_[g])
                    return false;
                if (value_[g] == 0 && lower_[g])
                    return false;
                if (value_[g] == kFree && (lower_[g] || !upper_[g])) {
                    value_[g] = lower_[g] ? 1 : 0;
                    trail.push_back(g);
                    changed = true;
                }
            }
        }
        for (const auto& r : p_.normals)
            if (!r.head && all_in(r.pos, lower_) && neg_all_false(r.neg))
                return false;
        for (const auto& c : p_.choices) {
            if (!all_in(c.pos, lower_) || !neg_all_false(c.neg))
                continue;
            if (chosen_count(c, lower_) > c.upper.value_or(static_cast<std::uint32_t>(c.distinct)))
                return false;
            if (chosen_count(c, upper_) < c.lower.value_or(0))
                return false;
        }
        return true;
    }

    [[nodiscard]] bool consistent_leaf() const {
        for (AtomId g : guesses_)
            if ((value_[g] == 1) != (lower_[g] != 0))
                return false;
        return lower_ == upper_;
    }

    void accept(const Bits& m) {
        if (is_answer_set(p_, m))
            results_.push_back(m);
    }

    void branch() {
        std::vector<AtomId> trail;
        if (propagate(trail)) {
            auto next = std::find_if(guesses_.begin(), guesses_.end(), [&](AtomId g) { return value_[g] == kFree; });
            if (next == guesses_.end()) {
                if (consistent_leaf())
                    accept(lower_);
            }
            else {
                const AtomId g = *next;
                for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
                    value_[g] = v;
                    branch();
                }
                value_[g] = kFree;
            }
        }
        for (AtomId a : trail)
            value_[a] = kFree;
    }

    const Compiled& p_;
    FixpointEngine engine_;
    std::vector<std::int8_t> value_;
    std::vector<char> is_guess_;
    std::vector<AtomId> guesses_;
    std::vector<PoolEntry> active_index_;
    Bits lower_;
    Bits upper_;
    std::vector<Bits> results_;
};

std::vector<AnswerSet> finish(const Compiled& p, const std::vector<Bits>& models, std::optional<std::size_t> limit) {
    std::vector<AnswerSet> out;
    out.reserve(models.size());
    for (const auto& m : models)
        out.push_back(AnswerSet{p.to_set(m)});
    std::sort(out.begin(), out.end(), printed_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (limit && out.size() > *limit)
        out.resize(*limit);
    return out;
}

} // namespace

std::string AnswerSet::to_string() const {
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty())
            out += ' ';
        out += qasp::to_string(a);
    }
    return out;
}

bool printed_less(const AnswerSet& lhs, const AnswerSet& rhs) { return lhs.to_string() < rhs.to_string(); }

std::set<Atom> herbrand_base(const Program& ground_program) {
    std::set<Atom> base;
    auto add = [&](const std::vector<Atom>& as) { base.insert(as.begin(), as.end()); };
    for (const auto& rule : ground_program.rules) {
        const Body& b = body_of(rule);
        add(b.positive);
        add(b.negative);
        if (const auto* n = std::get_if<NormalRule>(&rule))
            base.insert(n->head);
        else if (const auto* c = std::get_if<ChoiceRule>(&rule))
            for (const auto& e : c->elements) {
                base.insert(e.atom);
                add(e.condition);
            }
    }
    return base;
}

bool satisfies(const Interpretation& m, const Program& ground_program) {
    const Compiled p(ground_program);
    Interpretation relevant;
    for (const auto& a : m)
        if (p.find(a))
            relevant.insert(a);
    return satisfies(p, *p.to_bits(relevant));
}

Reduct gl_reduct(const Program& ground_program, const Interpretation& m) {
    const Compiled p(ground_program);
    Bits bits(p.size(), 0);
    for (const auto& a : m)
        if (auto id = p.find(a))
            bits[*id] = 1;
    Reduct out;
    for (const auto& r : reduct(p, bits)) {
        PositiveRule pr{p.atom(r.head), {}};
        for (AtomId a : r.body)
            pr.body.push_back(p.atom(a));
        out.rules.push_back(std::move(pr));
    }
    return out;
}

Interpretation least_model(const Reduct& reduct) {
    std::map<Atom, AtomId> ids;
    std::vector<const Atom*> atoms;
    auto id_of = [&](const Atom& a) {
        auto [it, inserted] = ids.emplace(a, static_cast<AtomId>(atoms.size()));
        if (inserted)
            atoms.push_back(&it->first);
        return it->second;
    };
    std::vector<CRule> rules;
    for (const auto& r : reduct.rules) {
        CRule c{id_of(r.head), {}};
        for (const auto& a : r.body)
            c.body.push_back(id_of(a));
        rules.push_back(std::move(c));
    }
    const Bits bits = least_model(atoms.size(), std::move(rules));
    Interpretation out;
    for (AtomId i = 0; i < bits.size(); ++i)
        if (bits[i])
            out.insert(*atoms[i]);
    return out;
}

bool is_answer_set(const Program& ground_program, const Interpretation& m) {
    const Compiled p(ground_program);
    auto bits = p.to_bits(m);
    return bits && is_answer_set(p, *bits);
}

std::vector<AnswerSet> enumerate_answer_sets(const Program& program, const SolveOptions& options) {
    const Program g = is_ground(program) ? program : ground(program);
    const Compiled p(g);
    Search search(p);
    if (options.strategy == SearchStrategy::Exhaustive) {
        if (p.size() > options.max_atoms || search.guess_count() >= 63)
            throw ResourceError("exhaustive search over " + std::to_string(p.size()) +
                                " ground atoms exceeds the budget of " + std::to_string(options.max_atoms));
        return finish(p, search.exhaustive_all(), options.limit);
    }
    return finish(p, search.propagate_all(), options.limit);
}

std::vector<AnswerSet> brute_force_answer_sets(const Program& program) {
    const Program g = is_ground(program) ? program : ground(program);
    const Compiled p(g);
    if (p.size() > brute_force_max_atoms)
        throw ResourceError("brute-force enumeration over " + std::to_string(p.size()) + " ground atoms exceeds " +
                            std::to_string(brute_force_max_atoms));
    std::vector<Bits> models;
    Bits m(p.size(), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
        for (std::size_t i = 0; i < p.size(); ++i)
            m[i] = static_cast<char>((mask >> i) & 1u);
        if (is_answer_set(p, m))
            models.push_back(m);
    }
    return finish(p, models, std::nullopt);
}

} // namespace qasp
