#include "seupdate/semantics.hpp"

#include "seupdate/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace seupdate {

namespace {

struct PositiveRule {
    AtomSet head;
    AtomSet body;
};

std::vector<PositiveRule> reduct_rules(const Program& program, Interpretation j) {
    std::vector<PositiveRule> out;
    for (const auto& r : program.rules())
        if (r.head_neg.subset_of(j) && !r.body_neg.intersects(j))
            out.push_back(PositiveRule{r.head_pos, r.body_pos});
    return out;
}

bool satisfies(Interpretation i, const std::vector<PositiveRule>& rules) noexcept {
    return std::all_of(rules.begin(), rules.end(),
                       [i](const PositiveRule& r) { return !r.body.subset_of(i) || r.head.intersects(i); });
}

AtomSet::Bits interpretation_count(std::size_t atom_count) { return AtomSet::Bits{1} << atom_count; }

} // namespace

bool satisfies(Interpretation j, const Program& program) noexcept {
    return std::all_of(program.rules().begin(), program.rules().end(),
                       [j](const Rule& r) { return r.satisfied_by(j); });
}

Interpretations classical_models(const Formula& formula, const Alphabet& alphabet) {
    require_enumerable(alphabet.size());
    if (!formula.relevant_atoms().subset_of(alphabet.full()))
        throw AlphabetError("formula mentions atoms outside the alphabet");
    Interpretations out;
    for (AtomSet::Bits j = 0; j < interpretation_count(alphabet.size()); ++j)
        if (formula.evaluate(AtomSet{j}))
            out.push_back(AtomSet{j});
    return out;
}

Interpretations classical_models(const Program& program) {
    require_enumerable(program.alphabet().size());
    Interpretations out;
    for (AtomSet::Bits j = 0; j < interpretation_count(program.alphabet().size()); ++j)
        if (satisfies(AtomSet{j}, program))
            out.push_back(AtomSet{j});
    return out;
}

Program reduct(const Program& program, Interpretation j) {
    std::vector<Rule> rules;
    for (const auto& r : reduct_rules(program, j))
        rules.push_back(Rule{r.head, {}, r.body, {}});
    return Program(program.alphabet(), std::move(rules));
}

SEModelSet se_models(const Program& program) {
    const std::size_t n = program.alphabet().size();
    require_enumerable(n);
    SEModelSet out(n);
    for (AtomSet::Bits jb = 0; jb < interpretation_count(n); ++jb) {
        const AtomSet j{jb};
        if (!satisfies(j, program))
            continue;
        const auto reduced = reduct_rules(program, j);
        // All subsets of J, descending from J to the empty set.
        for (AtomSet::Bits ib = jb;; ib = (ib - 1) & jb) {
            if (satisfies(AtomSet{ib}, reduced))
                out.insert(SEInterpretation(AtomSet{ib}, j));
            if (ib == 0)
                break;
        }
    }
    return out;
}

Interpretations answer_sets_by_reduct(const Program& program) {
    const std::size_t n = program.alphabet().size();
    require_enumerable(n);
    Interpretations out;
    for (AtomSet::Bits jb = 0; jb < interpretation_count(n); ++jb) {
        const AtomSet j{jb};
        const Program reduced = reduct(program, j);
        if (!satisfies(j, reduced))
            continue;
        bool minimal = true;
        for (AtomSet::Bits ib = (jb - 1) & jb; jb != 0; ib = (ib - 1) & jb) {
            if (satisfies(AtomSet{ib}, reduced)) {
                minimal = false;
                break;
            }
            if (ib == 0)
                break;
        }
        if (minimal)
            out.push_back(j);
    }
    return out;
}

Interpretations answer_sets_from_se(const SEModelSet& models) {
    Interpretations out;
    for (const auto& x : models) {
        if (!x.is_total())
            continue;
        bool has_smaller = false;
        const auto jb = x.there().bits();
        for (AtomSet::Bits ib = (jb - 1) & jb; jb != 0; ib = (ib - 1) & jb) {
            if (models.contains(SEInterpretation(AtomSet{ib}, x.there()))) {
                has_smaller = true;
                break;
            }
            if (ib == 0)
                break;
        }
        if (!has_smaller)
            out.push_back(x.there());
    }
    return out;
}

Interpretations answer_sets(const Program& program) {
    auto by_reduct = answer_sets_by_reduct(program);
    auto from_se = answer_sets_from_se(se_models(program));
    if (by_reduct != from_se)
        throw std::logic_error("answer set routes disagree on program:\n" + render_program(program));
    return by_reduct;
}

bool is_well_defined(const SEModelSet& models) { return models.is_well_defined(); }

bool is_basic_set(const SEModelSet& models) {
    const auto members = models.members();
    if (members.size() == 1)
        return members.front().is_total();
    if (members.size() == 2)
        return members[0].star() == members[1] && !members[0].is_total();
    return false;
}

bool is_basic(const Program& program) { return is_basic_set(se_models(program)); }

bool strongly_equivalent(const Program& p, const Program& q) {
    require_same_alphabet(p, q);
    return se_models(p) == se_models(q);
}

bool strongly_entails(const Program& p, const Program& q) {
    require_same_alphabet(p, q);
    return se_models(p).subset_of(se_models(q));
}

} // namespace seupdate
