// SPDX-License-Identifier: MIT
#include <qasp/syntax.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace qasp {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected + ", found " + found)
    , line_(line)
    , column_(column)
    , expected_(std::move(expected))
    , found_(std::move(found)) {}

SafetyError::SafetyError(std::string rule, std::string variable)
    : Error("unsafe variable " + variable + " in rule: " + rule)
    , rule_(std::move(rule))
    , variable_(std::move(variable)) {}

// ---------------------------------------------------------------------------
// Terms and atoms

bool Function::operator==(const Function& other) const {
    return name == other.name && args == other.args;
}

std::strong_ordering Function::operator<=>(const Function& other) const {
    if (auto c = name <=> other.name; c != 0)
        return c;
    return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(), other.args.end());
}

std::strong_ordering Term::operator<=>(const Term& other) const { return value <=> other.value; }

bool Term::ground() const {
    if (is<Variable>() || is<Range>())
        return false;
    if (is<Function>()) {
        const auto& f = as<Function>();
        return std::all_of(f.args.begin(), f.args.end(), [](const Term& t) { return t.ground(); });
    }
    return true;
}

bool Atom::ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.ground(); });
}

std::strong_ordering Atom::operator<=>(const Atom& other) const {
    if (auto c = predicate <=> other.predicate; c != 0)
        return c;
    return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(), other.args.end());
}

const Body& body_of(const Rule& rule) {
    return std::visit([](const auto& r) -> const Body& { return r.body; }, rule);
}

// ---------------------------------------------------------------------------
// Program

namespace {

std::optional<Atom> term_to_atom(const Term& t) {
    if (t.is<Constant>())
        return Atom(t.as<Constant>().name);
    if (t.is<Function>() && t.ground()) {
        const auto& f = t.as<Function>();
        return Atom(f.name, f.args);
    }
    return std::nullopt;
}

} // namespace

std::optional<Atom> question_of(const Rule& rule) {
    const auto* n = std::get_if<NormalRule>(&rule);
    if (!n || !n->is_fact() || n->head.predicate != question_predicate || n->head.arity() != 1)
        return std::nullopt;
    return term_to_atom(n->head.args.front());
}

Program::Program(std::vector<Rule> rs) {
    for (auto& r : rs)
        add(std::move(r));
}

void Program::add(Rule rule) {
    if (auto q = question_of(rule))
        question_atoms.insert(std::move(*q));
    rules.push_back(std::move(rule));
}

Program& Program::append(const Program& other) {
    for (const auto& r : other.rules)
        add(r);
    return *this;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    End,
    Ident,    // lowercase-initial identifier
    Var,      // uppercase-initial identifier
    Int,
    Not,
    If,       // :-
    Dot,
    DotDot,
    Comma,
    Semi,
    Colon,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Minus,
    Invalid,
};

std::string describe(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::Var: return "variable";
        case Tok::Int: return "integer";
        case Tok::Not: return "'not'";
        case Tok::If: return "':-'";
        case Tok::Dot: return "'.'";
        case Tok::DotDot: return "'..'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Colon: return "':'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Minus: return "'-'";
        case Tok::Invalid: return "invalid character";
    }
    return "token";
}

struct Token {
    Tok kind = Tok::End;
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        const std::size_t start = pos_;
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            advance(1);
            t.kind = k;
        };
        if (is_alpha(c) || c == '_') {
            while (pos_ < src_.size() && (is_alnum(src_[pos_]) || src_[pos_] == '_'))
                advance(1);
            t.text = src_.substr(start, pos_ - start);
            if (t.text == "not")
                t.kind = Tok::Not;
            else if (std::islower(static_cast<unsigned char>(c)))
                t.kind = Tok::Ident;
            else if (std::isupper(static_cast<unsigned char>(c)))
                t.kind = Tok::Var;
            else
                t.kind = Tok::Invalid; // '_' initial: anonymous variables are not part of the dialect
            return t;
        }
        if (is_digit(c)) {
            while (pos_ < src_.size() && is_digit(src_[pos_]))
                advance(1);
            t.kind = Tok::Int;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        switch (c) {
            case ':':
                if (peek(1) == '-') {
                    advance(2);
                    t.kind = Tok::If;
                }
                else
                    single(Tok::Colon);
                break;
            case '.':
                if (peek(1) == '.') {
                    advance(2);
                    t.kind = Tok::DotDot;
                }
                else
                    single(Tok::Dot);
                break;
            case ',': single(Tok::Comma); break;
            case ';': single(Tok::Semi); break;
            case '{': single(Tok::LBrace); break;
            case '}': single(Tok::RBrace); break;
            case '(': single(Tok::LParen); break;
            case ')': single(Tok::RParen); break;
            case '-': single(Tok::Minus); break;
            default: single(Tok::Invalid); break;
        }
        t.text = src_.substr(start, pos_ - start);
        return t;
    }

private:
    static bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    [[nodiscard]] char peek(std::size_t off) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }

    void advance(std::size_t n) {
        for (; n > 0 && pos_ < src_.size(); --n, ++pos_) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            }
            else
                ++col_;
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance(1);
            }
            else if (std::isspace(static_cast<unsigned char>(c)))
                advance(1);
            else
                break;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { shift(); }

    Program program() {
        Program p;
        while (cur_.kind != Tok::End)
            p.add(statement());
        return p;
    }

    Atom single_atom() {
        Atom a = atom();
        expect(Tok::End);
        return a;
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = cur_.kind == Tok::End ? "end of input" : "'" + std::string(cur_.text) + "'";
        throw ParseError(cur_.line, cur_.column, expected, found);
    }

    Token expect(Tok k) {
        if (cur_.kind != k)
            fail(describe(k));
        Token t = cur_;
        shift();
        return t;
    }

    bool accept(Tok k) {
        if (cur_.kind != k)
            return false;
        shift();
        return true;
    }

    std::int64_t integer_value(const Token& tok, bool negative) const {
        std::uint64_t magnitude = 0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), magnitude);
        const auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + (negative ? 1u : 0u);
        if (ec != std::errc{} || magnitude > limit)
            throw ParseError(tok.line, tok.column, "integer within 64-bit range", "'" + std::string(tok.text) + "'");
        if (negative)
            return magnitude == limit ? std::numeric_limits<std::int64_t>::min() : -static_cast<std::int64_t>(magnitude);
        return static_cast<std::int64_t>(magnitude);
    }

    std::int64_t signed_integer() {
        const bool negative = accept(Tok::Minus);
        if (cur_.kind != Tok::Int)
            fail("integer");
        Token t = cur_;
        shift();
        return integer_value(t, negative);
    }

    Term term() {
        if (cur_.kind == Tok::Int || cur_.kind == Tok::Minus) {
            const Token start = cur_;
            const std::int64_t lo = signed_integer();
            if (accept(Tok::DotDot)) {
                const std::int64_t hi = signed_integer();
                if (lo > hi)
                    throw ParseError(start.line, start.column, "range with lower bound <= upper bound",
                                     std::to_string(lo) + ".." + std::to_string(hi));
                return Term::range(lo, hi);
            }
            return Term::integer(lo);
        }
        if (cur_.kind == Tok::Var) {
            std::string name(cur_.text);
            shift();
            return Term::variable(std::move(name));
        }
        if (cur_.kind == Tok::Ident) {
            std::string name(cur_.text);
            shift();
            if (accept(Tok::LParen)) {
                Function f{std::move(name), term_list()};
                expect(Tok::RParen);
                return f;
            }
            return Term::constant(std::move(name));
        }
        fail("term");
    }

    std::vector<Term> term_list() {
        std::vector<Term> out;
        out.push_back(term());
        while (accept(Tok::Comma))
            out.push_back(term());
        return out;
    }

    Atom atom() {
        if (cur_.kind != Tok::Ident)
            fail("atom");
        Atom a(std::string(cur_.text));
        shift();
        if (accept(Tok::LParen)) {
            a.args = term_list();
            expect(Tok::RParen);
        }
        return a;
    }

    Body body() {
        Body b;
        do {
            if (accept(Tok::Not))
                b.negative.push_back(atom());
            else
                b.positive.push_back(atom());
        } while (accept(Tok::Comma));
        return b;
    }

    std::uint32_t bound() {
        Token t = cur_;
        expect(Tok::Int);
        const auto v = integer_value(t, false);
        if (v > std::numeric_limits<std::uint32_t>::max())
            throw ParseError(t.line, t.column, "cardinality bound within 32-bit range", "'" + std::string(t.text) + "'");
        return static_cast<std::uint32_t>(v);
    }

    ChoiceElement element() {
        ChoiceElement e{atom(), {}};
        if (accept(Tok::Colon)) {
            do {
                if (cur_.kind == Tok::Not)
                    fail("positive condition atom");
                e.condition.push_back(atom());
            } while (accept(Tok::Comma));
        }
        return e;
    }

    ChoiceRule choice() {
        ChoiceRule c;
        const Token start = cur_;
        if (cur_.kind == Tok::Int)
            c.lower = bound();
        expect(Tok::LBrace);
        if (cur_.kind != Tok::RBrace) {
            c.elements.push_back(element());
            while (accept(Tok::Semi))
                c.elements.push_back(element());
        }
        expect(Tok::RBrace);
        if (cur_.kind == Tok::Int)
            c.upper = bound();
        if (c.lower && c.upper && *c.lower > *c.upper)
            throw ParseError(start.line, start.column, "lower bound <= upper bound",
                             std::to_string(*c.lower) + " > " + std::to_string(*c.upper));
        return c;
    }

    Rule statement() {
        if (accept(Tok::If)) {
            ConstraintRule r{body()};
            expect(Tok::Dot);
            return r;
        }
        if (cur_.kind == Tok::Int || cur_.kind == Tok::LBrace) {
            ChoiceRule r = choice();
            if (accept(Tok::If))
                r.body = body();
            expect(Tok::Dot);
            return r;
        }
        if (cur_.kind != Tok::Ident)
            fail("rule");
        NormalRule r{atom(), {}};
        if (accept(Tok::If))
            r.body = body();
        expect(Tok::Dot);
        return r;
    }

    Lexer lex_;
    Token cur_;
};

// ---------------------------------------------------------------------------
// Printing

void write_terms(std::ostringstream& os, const std::vector<Term>& ts);

void write_term(std::ostringstream& os, const Term& t) {
    std::visit(
        [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Integer>)
                os << v.value;
            else if constexpr (std::is_same_v<T, Constant> || std::is_same_v<T, Variable>)
                os << v.name;
            else if constexpr (std::is_same_v<T, Range>)
                os << v.lo << ".." << v.hi;
            else {
                os << v.name << '(';
                write_terms(os, v.args);
                os << ')';
            }
        },
        t.value);
}

void write_terms(std::ostringstream& os, const std::vector<Term>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i)
            os << ',';
        write_term(os, ts[i]);
    }
}

void write_atom(std::ostringstream& os, const Atom& a) {
    os << a.predicate;
    if (!a.args.empty()) {
        os << '(';
        write_terms(os, a.args);
        os << ')';
    }
}

void write_body(std::ostringstream& os, const Body& b) {
    bool first = true;
    for (const auto& a : b.positive) {
        os << (first ? "" : ", ");
        write_atom(os, a);
        first = false;
    }
    for (const auto& a : b.negative) {
        os << (first ? "not " : ", not ");
        write_atom(os, a);
        first = false;
    }
}

void write_rule(std::ostringstream& os, const Rule& rule) {
    std::visit(
        [&os](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, NormalRule>) {
                write_atom(os, r.head);
                if (!r.body.empty())
                    os << " :- ";
            }
            else if constexpr (std::is_same_v<T, ConstraintRule>) {
                os << ":- ";
            }
            else {
                if (r.lower)
                    os << *r.lower;
                os << '{';
                for (std::size_t i = 0; i < r.elements.size(); ++i) {
                    if (i)
                        os << "; ";
                    write_atom(os, r.elements[i].atom);
                    for (std::size_t j = 0; j < r.elements[i].condition.size(); ++j) {
                        os << (j ? "," : ":");
                        write_atom(os, r.elements[i].condition[j]);
                    }
                }
                os << '}';
                if (r.upper)
                    os << *r.upper;
                if (!r.body.empty())
                    os << " :- ";
            }
            write_body(os, r.body);
            os << '.';
        },
        rule);
}

} // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Atom parse_atom(std::string_view text) { return Parser(text).single_atom(); }

std::string to_string(const Term& term) {
    std::ostringstream os;
    write_term(os, term);
    return os.str();
}

std::string to_string(const Atom& atom) {
    std::ostringstream os;
    write_atom(os, atom);
    return os.str();
}

std::string to_string(const Rule& rule) {
    std::ostringstream os;
    write_rule(os, rule);
    return os.str();
}

std::string print_program(const Program& program) {
    std::ostringstream os;
    for (const auto& r : program.rules) {
        write_rule(os, r);
        os << '\n';
    }
    return os.str();
}

} // namespace qasp
