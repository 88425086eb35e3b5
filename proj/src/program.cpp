#include "seupdate/program.hpp"

#include "seupdate/errors.hpp"

#include <algorithm>
#include <cctype>

namespace seupdate {

bool Rule::is_fact() const noexcept {
    return head_pos.size() + head_neg.size() == 1 && body_pos.empty() && body_neg.empty();
}

bool Rule::is_positive_fact() const noexcept { return is_fact() && head_pos.size() == 1; }

bool Rule::is_non_disjunctive() const noexcept { return head_pos.size() + head_neg.size() <= 1; }

bool Rule::is_definite() const noexcept {
    return is_non_disjunctive() && head_neg.empty() && body_neg.empty() && head_pos.size() == 1;
}

RuleClass classify(const Rule& rule) noexcept {
    return RuleClass{rule.is_fact(), rule.is_positive_fact(), rule.is_non_disjunctive(), rule.is_definite()};
}

Program::Program(Alphabet alphabet, std::vector<Rule> rules) : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    const AtomSet full = alphabet_.full();
    for (const auto& r : rules_)
        if (!r.atoms().subset_of(full))
            throw AlphabetError("rule mentions an atom outside the alphabet");
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

bool Program::contains(const Rule& rule) const { return std::binary_search(rules_.begin(), rules_.end(), rule); }

void Program::add(const Rule& rule) {
    if (!rule.atoms().subset_of(alphabet_.full()))
        throw AlphabetError("rule mentions an atom outside the alphabet");
    auto it = std::lower_bound(rules_.begin(), rules_.end(), rule);
    if (it == rules_.end() || *it != rule)
        rules_.insert(it, rule);
}

Program Program::united_with(const Program& other) const {
    require_same_alphabet(*this, other);
    std::vector<Rule> all;
    all.reserve(rules_.size() + other.rules_.size());
    std::set_union(rules_.begin(), rules_.end(), other.rules_.begin(), other.rules_.end(), std::back_inserter(all));
    Program out;
    out.alphabet_ = alphabet_;
    out.rules_ = std::move(all);
    return out;
}

Program Program::over(const Alphabet& wider) const {
    std::vector<Rule> mapped;
    mapped.reserve(rules_.size());
    for (const auto& r : rules_)
        mapped.push_back(Rule{alphabet_.translate(r.head_pos, wider), alphabet_.translate(r.head_neg, wider),
                              alphabet_.translate(r.body_pos, wider), alphabet_.translate(r.body_neg, wider)});
    return Program(wider, std::move(mapped));
}

bool Program::is_non_disjunctive() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_non_disjunctive(); });
}

bool Program::is_definite() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_definite(); });
}

bool Program::is_facts() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_fact(); });
}

void require_same_alphabet(const Program& a, const Program& b) {
    if (a.alphabet() != b.alphabet())
        throw AlphabetError("programs are over different alphabets");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Literal {
    std::string atom;
    bool negated;
};

struct ParsedRule {
    std::vector<Literal> head;
    std::vector<Literal> body;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<ParsedRule> rules() {
        std::vector<ParsedRule> out;
        skip_space();
        while (pos_ < text_.size()) {
            out.push_back(rule());
            skip_space();
        }
        return out;
    }

private:
    ParsedRule rule() {
        ParsedRule r;
        if (!at_arrow()) {
            r.head.push_back(literal());
            skip_space();
            while (peek() == ';') {
                advance();
                skip_space();
                r.head.push_back(literal());
                skip_space();
            }
        }
        if (at_arrow()) {
            advance();
            advance();
            skip_space();
            if (peek() != '.') {
                r.body.push_back(literal());
                skip_space();
                while (peek() == ',') {
                    advance();
                    skip_space();
                    r.body.push_back(literal());
                    skip_space();
                }
            }
        }
        if (peek() != '.')
            fail(pos_ < text_.size() ? "expected '.'" : "unexpected end of input, expected '.'");
        advance();
        return r;
    }

    Literal literal() {
        bool negated = false;
        if (peek() == '~') {
            negated = true;
            advance();
            skip_space();
        }
        if (!(peek() >= 'a' && peek() <= 'z'))
            fail(pos_ < text_.size() ? "expected an atom" : "unexpected end of input, expected an atom");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            advance();
        return Literal{std::string(text_.substr(start, pos_ - start)), negated};
    }

    bool at_arrow() const { return peek() == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-'; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string msg = what;
        if (pos_ < text_.size())
            msg += ", found '" + std::string(1, text_[pos_]) + "'";
        throw SyntaxError(line_, column_, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

Alphabet collect_atoms(const std::vector<ParsedRule>& rules) {
    std::vector<std::string> names;
    for (const auto& r : rules) {
        for (const auto& l : r.head)
            names.push_back(l.atom);
        for (const auto& l : r.body)
            names.push_back(l.atom);
    }
    return Alphabet(std::move(names));
}

} // namespace

Alphabet atoms_in(std::string_view text) { return collect_atoms(Parser(text).rules()); }

Program parse_program(std::string_view text, const std::optional<Alphabet>& alphabet) {
    const auto parsed = Parser(text).rules();
    Alphabet a = alphabet ? *alphabet : collect_atoms(parsed);
    std::vector<Rule> rules;
    rules.reserve(parsed.size());
    for (const auto& pr : parsed) {
        Rule r;
        for (const auto& l : pr.head)
            (l.negated ? r.head_neg : r.head_pos) |= AtomSet::singleton(a.require(l.atom));
        for (const auto& l : pr.body)
            (l.negated ? r.body_neg : r.body_pos) |= AtomSet::singleton(a.require(l.atom));
        rules.push_back(r);
    }
    return Program(std::move(a), std::move(rules));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void append_literals(std::string& out, AtomSet pos, AtomSet neg, const Alphabet& a, const char* sep) {
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first)
            out += sep;
        out += s;
        first = false;
    };
    for (auto i : pos.atoms())
        emit(a.name(i));
    for (auto i : neg.atoms())
        emit("~" + a.name(i));
}

} // namespace

std::string render_rule(const Rule& rule, const Alphabet& alphabet) {
    std::string out;
    append_literals(out, rule.head_pos, rule.head_neg, alphabet, " ; ");
    const bool has_body = !rule.body_pos.empty() || !rule.body_neg.empty();
    if (has_body || rule.is_constraint()) {
        out += out.empty() ? ":-" : " :-";
        if (has_body) {
            out += ' ';
            append_literals(out, rule.body_pos, rule.body_neg, alphabet, ", ");
        }
    }
    return out + ".";
}

std::string render_program(const Program& program) {
    std::string out;
    for (const auto& r : program.rules()) {
        if (!out.empty())
            out += '\n';
        out += render_rule(r, program.alphabet());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Formulas

Formula to_formula(const Rule& rule) {
    std::vector<Formula> body;
    for (auto i : rule.body_pos.atoms())
        body.push_back(Formula::atom(i));
    for (auto i : rule.body_neg.atoms())
        body.push_back(!Formula::atom(i));
    std::vector<Formula> head;
    for (auto i : rule.head_pos.atoms())
        head.push_back(Formula::atom(i));
    for (auto i : rule.head_neg.atoms())
        head.push_back(!Formula::atom(i));
    return implies(Formula::all_of(std::move(body)), Formula::any_of(std::move(head)));
}

Formula to_formula(const Program& program) {
    std::vector<Formula> parts;
    parts.reserve(program.size());
    for (const auto& r : program.rules())
        parts.push_back(to_formula(r));
    return Formula::all_of(std::move(parts));
}

AtomSet relevant_atoms(const Formula& formula) { return formula.relevant_atoms(); }

AtomSet relevant_atoms(const Program& program) { return to_formula(program).relevant_atoms(); }

} // namespace seupdate
