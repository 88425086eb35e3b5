#include "seupdate/formula.hpp"

#include "seupdate/errors.hpp"

#include <bit>

namespace seupdate {

struct Formula::Node {
    Kind kind;
    std::size_t atom = 0;
    std::vector<Formula> children;
};

Formula Formula::make(Kind kind, std::vector<Formula> children) {
    return Formula(std::make_shared<const Node>(Node{kind, 0, std::move(children)}));
}

Formula Formula::top() {
    static const Formula f(std::make_shared<const Node>(Node{Kind::top, 0, {}}));
    return f;
}

Formula Formula::bottom() {
    static const Formula f(std::make_shared<const Node>(Node{Kind::bottom, 0, {}}));
    return f;
}

Formula Formula::atom(std::size_t position) {
    if (position >= kMaxAtoms)
        throw AlphabetError("atom position out of range");
    return Formula(std::make_shared<const Node>(Node{Kind::atom, position, {}}));
}

Formula operator!(const Formula& f) { return Formula::make(Formula::Kind::negation, {f}); }
Formula operator&&(const Formula& a, const Formula& b) { return Formula::make(Formula::Kind::conjunction, {a, b}); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::make(Formula::Kind::disjunction, {a, b}); }
Formula implies(const Formula& a, const Formula& b) { return Formula::make(Formula::Kind::implication, {a, b}); }
Formula iff(const Formula& a, const Formula& b) { return Formula::make(Formula::Kind::equivalence, {a, b}); }

Formula Formula::all_of(std::vector<Formula> operands) {
    if (operands.empty())
        return top();
    Formula acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i)
        acc = acc && operands[i];
    return acc;
}

Formula Formula::any_of(std::vector<Formula> operands) {
    if (operands.empty())
        return bottom();
    Formula acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i)
        acc = acc || operands[i];
    return acc;
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

std::size_t Formula::atom_position() const {
    if (node_->kind != Kind::atom)
        throw PreconditionError("not an atom");
    return node_->atom;
}

const Formula& Formula::left() const {
    if (node_->children.empty())
        throw PreconditionError("formula has no operand");
    return node_->children.front();
}

const Formula& Formula::right() const {
    if (node_->children.size() < 2)
        throw PreconditionError("formula has no second operand");
    return node_->children[1];
}

bool Formula::evaluate(Interpretation j) const {
    const auto& c = node_->children;
    switch (node_->kind) {
    case Kind::top: return true;
    case Kind::bottom: return false;
    case Kind::atom: return j.contains(node_->atom);
    case Kind::negation: return !c[0].evaluate(j);
    case Kind::conjunction: return c[0].evaluate(j) && c[1].evaluate(j);
    case Kind::disjunction: return c[0].evaluate(j) || c[1].evaluate(j);
    case Kind::implication: return !c[0].evaluate(j) || c[1].evaluate(j);
    case Kind::equivalence: return c[0].evaluate(j) == c[1].evaluate(j);
    }
    return false;
}

AtomSet Formula::relevant_atoms() const {
    if (node_->kind == Kind::atom)
        return AtomSet::singleton(node_->atom);
    AtomSet out;
    for (const auto& child : node_->children)
        out |= child.relevant_atoms();
    return out;
}

namespace {

bool is_literal(const Formula& f) {
    return f.kind() == Formula::Kind::atom ||
           (f.kind() == Formula::Kind::negation && f.operand().kind() == Formula::Kind::atom);
}

// Number of positive atoms in a clause, or -1 if f is not a clause.
int clause_positives(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::bottom: return 0;
    case Formula::Kind::atom: return 1;
    case Formula::Kind::disjunction: {
        int l = clause_positives(f.left());
        int r = clause_positives(f.right());
        return (l < 0 || r < 0) ? -1 : l + r;
    }
    default: return is_literal(f) ? 0 : -1;
    }
}

} // namespace

bool Formula::is_horn() const {
    switch (kind()) {
    case Kind::top: return true;
    case Kind::conjunction: return left().is_horn() && right().is_horn();
    default: {
        int positives = clause_positives(*this);
        return positives >= 0 && positives <= 1;
    }
    }
}

bool Formula::is_complete(std::size_t atom_count) const {
    if (atom_count > 24)
        throw AlphabetError("alphabet too large for model enumeration");
    std::size_t models = 0;
    for (AtomSet::Bits j = 0; j < (AtomSet::Bits{1} << atom_count); ++j)
        if (evaluate(AtomSet{j}) && ++models > 1)
            return false;
    return models == 1;
}

std::string Formula::to_string(const Alphabet& alphabet) const {
    const auto& c = node_->children;
    auto binary = [&](const char* op) {
        return "(" + c[0].to_string(alphabet) + " " + op + " " + c[1].to_string(alphabet) + ")";
    };
    switch (node_->kind) {
    case Kind::top: return "T";
    case Kind::bottom: return "F";
    case Kind::atom: return alphabet.name(node_->atom);
    case Kind::negation: return "-" + c[0].to_string(alphabet);
    case Kind::conjunction: return binary("&");
    case Kind::disjunction: return binary("|");
    case Kind::implication: return binary("->");
    case Kind::equivalence: return binary("<->");
    }
    return {};
}

} // namespace seupdate
