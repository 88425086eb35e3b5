#pragma once

#include "seupdate/alphabet.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace seupdate {

/// Classical propositional formula over the atoms of an alphabet (atoms are
/// referenced by position). Immutable, cheap to copy.
class Formula {
public:
    enum class Kind { top, bottom, atom, negation, conjunction, disjunction, implication, equivalence };

    static Formula top();
    static Formula bottom();
    static Formula atom(std::size_t position);
    /// Conjunction of all operands; the empty conjunction is top.
    static Formula all_of(std::vector<Formula> operands);
    /// Disjunction of all operands; the empty disjunction is bottom.
    static Formula any_of(std::vector<Formula> operands);

    friend Formula operator!(const Formula& f);
    friend Formula operator&&(const Formula& a, const Formula& b);
    friend Formula operator||(const Formula& a, const Formula& b);
    friend Formula implies(const Formula& a, const Formula& b);
    friend Formula iff(const Formula& a, const Formula& b);

    Kind kind() const noexcept;
    std::size_t atom_position() const;
    const Formula& left() const;
    const Formula& right() const;
    const Formula& operand() const { return left(); }

    bool evaluate(Interpretation interpretation) const;
    /// Atoms occurring syntactically in the formula.
    AtomSet relevant_atoms() const;
    /// Conjunction of clauses, each a disjunction of literals with at most one
    /// positive atom. Top and bottom count as (empty) clause structures.
    bool is_horn() const;
    /// Exactly one model over an alphabet of `atom_count` atoms.
    bool is_complete(std::size_t atom_count) const;

    std::string to_string(const Alphabet& alphabet) const;

private:
    struct Node;
    static Formula make(Kind kind, std::vector<Formula> children);
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace seupdate
