#pragma once

#include "seupdate/alphabet.hpp"
#include "seupdate/formula.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seupdate {

/// A rule H+ ; ~H- :- B+, ~B-. with all four parts given as atom sets.
struct Rule {
    AtomSet head_pos;
    AtomSet head_neg;
    AtomSet body_pos;
    AtomSet body_neg;

    /// Exactly one head literal and an empty body.
    bool is_fact() const noexcept;
    bool is_positive_fact() const noexcept;
    bool is_non_disjunctive() const noexcept;
    bool is_definite() const noexcept;
    bool is_constraint() const noexcept { return head_pos.empty() && head_neg.empty(); }

    AtomSet atoms() const noexcept { return head_pos | head_neg | body_pos | body_neg; }

    /// Classical satisfaction of the body conjunction B+ and not B-.
    bool body_satisfied_by(Interpretation j) const noexcept {
        return body_pos.subset_of(j) && !body_neg.intersects(j);
    }
    bool head_satisfied_by(Interpretation j) const noexcept {
        return head_pos.intersects(j) || !head_neg.subset_of(j);
    }
    bool satisfied_by(Interpretation j) const noexcept {
        return !body_satisfied_by(j) || head_satisfied_by(j);
    }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct RuleClass {
    bool fact = false;
    bool positive_fact = false;
    bool non_disjunctive = false;
    bool definite = false;

    friend bool operator==(const RuleClass&, const RuleClass&) = default;
};

RuleClass classify(const Rule& rule) noexcept;

/// A finite set of rules over an explicit alphabet. Rules are kept sorted and
/// duplicate-free, so equal rule sets compare equal.
class Program {
public:
    Program() = default;
    explicit Program(Alphabet alphabet, std::vector<Rule> rules = {});

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    bool contains(const Rule& rule) const;

    void add(const Rule& rule);
    /// Set union of the rules; both programs must share the alphabet.
    Program united_with(const Program& other) const;
    /// The same rules re-expressed over a superset alphabet.
    Program over(const Alphabet& wider) const;

    bool is_non_disjunctive() const noexcept;
    bool is_definite() const noexcept;
    /// Every rule is a fact.
    bool is_facts() const noexcept;

    friend bool operator==(const Program&, const Program&) = default;

private:
    Alphabet alphabet_;
    std::vector<Rule> rules_;
};

/// Throws AlphabetError unless both programs use the same alphabet.
void require_same_alphabet(const Program& a, const Program& b);

/// Parses program text. Without an explicit alphabet the alphabet is the sorted
/// set of atoms occurring in the text. Throws SyntaxError / AlphabetError.
Program parse_program(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);
/// Only the atoms occurring in `text`, sorted.
Alphabet atoms_in(std::string_view text);

std::string render_rule(const Rule& rule, const Alphabet& alphabet);
/// One rule per line in canonical order, no trailing newline.
std::string render_program(const Program& program);

Formula to_formula(const Rule& rule);
/// Conjunction of the rule formulas; the empty program maps to top.
Formula to_formula(const Program& program);

AtomSet relevant_atoms(const Formula& formula);
AtomSet relevant_atoms(const Program& program);

} // namespace seupdate
