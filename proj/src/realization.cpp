#include "seupdate/realization.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/semantics.hpp"

#include <stdexcept>

namespace seupdate {

SEModelSet star_closure(const SEModelSet& models) {
    SEModelSet out = models;
    for (const auto& x : models)
        out.insert(x.star());
    return out;
}

Program realize(const SEModelSet& models, const Alphabet& alphabet) {
    if (models.atom_count() != alphabet.size())
        throw AlphabetError("model set and alphabet differ in size");
    const SEModelSet closed = star_closure(models);
    const AtomSet all = alphabet.full();
    std::vector<Rule> rules;
    for (const auto& x : SEModelSet::universe(alphabet.size())) {
        if (closed.contains(x))
            continue;
        const AtomSet i = x.here();
        const AtomSet j = x.there();
        if (x.is_total())
            rules.push_back(Rule{{}, {}, j, all - j});
        else if (closed.contains(x.star()))
            rules.push_back(Rule{j - i, j, i, all - j});
    }
    Program out(alphabet, std::move(rules));
    if (se_models(out) != closed)
        throw std::logic_error("realization does not reproduce " + closed.to_string(alphabet));
    return out;
}

Program conjoin(const Program& p, const Program& q) { return p.united_with(q); }

Program disjoin(const Program& p, const Program& q) {
    require_same_alphabet(p, q);
    return realize(se_models(p) | se_models(q), p.alphabet());
}

} // namespace seupdate
