// SPDX-License-Identifier: MIT
#include <qasp/reason.hpp>

#include <qasp/ground.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qasp {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::int64_t percent_of(std::uint64_t num, std::uint64_t den) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    // Non-negative operands: floor(x + 1/2) is round-half-away-from-zero.
    return static_cast<std::int64_t>((200 * num + den) / (2 * den));
}

std::string Explanation::to_string() const { return AnswerSet{atoms}.to_string(); }

std::uint64_t count_answer_sets(const Program& p, const SolveOptions& options) {
    SolveOptions all = options;
    all.limit.reset();
    return enumerate_answer_sets(p, all).size();
}

Program question_constraints(const std::set<Atom>& q) {
    Program out;
    for (const auto& a : q)
        out.add(ConstraintRule{Body{{}, {a}}});
    return out;
}

Program strip_questions(const Program& p) {
    Program out;
    for (const auto& r : p.rules)
        if (!question_of(r))
            out.add(r);
    return out;
}

PlausibilityReport plausibility(const Program& p, const std::optional<std::set<Atom>>& q, const SolveOptions& options) {
    PlausibilityReport report;
    report.question = q ? *q : p.question_atoms;
    if (report.question.empty())
        throw NoQuestionError();
    const Program base = strip_questions(p);
    Program asked = base;
    asked.append(question_constraints(report.question));
    report.total = count_answer_sets(base, options);
    report.numerator = count_answer_sets(asked, options);
    report.denominator = std::max<std::uint64_t>(1, report.total);
    report.value = Rational(report.numerator, report.denominator);
    report.percent = percent_of(report.numerator, report.denominator);
    return report;
}

bool credulous(const Program& p, const Atom& a, const SolveOptions& options) {
    const auto sets = enumerate_answer_sets(p, options);
    return std::any_of(sets.begin(), sets.end(), [&](const AnswerSet& m) { return m.contains(a); });
}

bool skeptical(const Program& p, const Atom& a, const SolveOptions& options) {
    const auto sets = enumerate_answer_sets(p, options);
    return !sets.empty() && std::all_of(sets.begin(), sets.end(), [&](const AnswerSet& m) { return m.contains(a); });
}

std::vector<Explanation> minimal_explanations(const Program& p, const Atom& observation,
                                              const std::set<Atom>& abducibles, const SolveOptions& options) {
    Program explained = p;
    explained.add(ConstraintRule{Body{{}, {observation}}});
    SolveOptions all = options;
    all.limit.reset();
    const auto sets = enumerate_answer_sets(explained, all);
    if (sets.empty())
        throw NoModelError("no answer set satisfies the observation " + to_string(observation));

    std::set<std::set<Atom>> projections;
    for (const auto& m : sets) {
        std::set<Atom> e;
        std::set_intersection(m.atoms.begin(), m.atoms.end(), abducibles.begin(), abducibles.end(),
                              std::inserter(e, e.end()));
        projections.insert(std::move(e));
    }
    std::vector<Explanation> out;
    for (const auto& e : projections) {
        const bool dominated = std::any_of(projections.begin(), projections.end(), [&](const std::set<Atom>& other) {
            return other.size() < e.size() && std::includes(e.begin(), e.end(), other.begin(), other.end());
        });
        if (!dominated)
            out.push_back(Explanation{e});
    }
    std::sort(out.begin(), out.end(),
              [](const Explanation& a, const Explanation& b) { return a.to_string() < b.to_string(); });
    return out;
}

std::set<Atom> default_abducibles(const Program& p) {
    const Program g = is_ground(p) ? p : ground(p);
    std::set<Atom> out;
    for (const auto& r : g.rules)
        if (const auto* c = std::get_if<ChoiceRule>(&r))
            for (const auto& e : c->elements)
                if ((e.atom.predicate == "prem" || e.atom.predicate == "nprem") && e.atom.arity() == 1)
                    out.insert(e.atom);
    return out;
}

} // namespace qasp
