#include "seupdate/update.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/random.hpp"
#include "seupdate/realization.hpp"

#include <algorithm>
#include <map>

namespace seupdate {

SEModelSet se_update_models(const SEModelSet& original, const SEModelSet& update, const PreorderAssignment& o,
                            const Alphabet* alphabet) {
    if (original.atom_count() != update.atom_count())
        throw AlphabetError("update operands are over different alphabets");
    require_atom_count(o, original.atom_count());
    SEModelSet result(original.atom_count());
    for (const auto& x : original)
        result |= minima(update, x, o);
    if (result.is_well_defined())
        return result;

    const Alphabet names = alphabet ? *alphabet : standard_alphabet(original.atom_count());
    for (const auto& y : result) {
        if (result.contains(y.star()))
            continue;
        for (const auto& x : original)
            if (minima(update, x, o).contains(y))
                throw WellDefinednessError("assignment '" + o.name() + "' is not well-defined: minima for X = " +
                                           x.to_string(names) + " contain " + y.to_string(names) +
                                           " but no X' contributes " + y.star().to_string(names));
    }
    throw WellDefinednessError("assignment '" + o.name() + "' produced a set that is not closed under star");
}

Program se_update(const Program& original, const Program& update, const PreorderAssignment& o) {
    require_same_alphabet(original, update);
    const auto& a = original.alphabet();
    return realize(se_update_models(se_models(original), se_models(update), o, &a), a);
}

UpdateOperator characterised_by(AssignmentPtr o) {
    const PreorderAssignment* raw = o.get();
    std::string name = o->name();
    return UpdateOperator(
        std::move(name), [raw](const Program& p, const Program& u) { return se_update(p, u, *raw); }, std::move(o));
}

UpdateOperator winslett_operator() { return characterised_by(std::make_shared<const WinslettAssignment>()); }

UpdateOperator projection_operator() {
    return UpdateOperator("projection", [](const Program& p, const Program& u) {
        require_same_alphabet(p, u);
        return u;
    });
}

UpdateOperator rule_rejection_operator() {
    return UpdateOperator("rule-rejection", [](const Program& p, const Program& u) {
        require_same_alphabet(p, u);
        Program out = u;
        for (const auto& r : p.rules()) {
            const bool clashes = std::any_of(u.rules().begin(), u.rules().end(), [&r](const Rule& f) {
                return f.is_fact() && (r.head_pos.intersects(f.head_neg) || r.head_neg.intersects(f.head_pos));
            });
            if (!clashes)
                out.add(r);
        }
        return out;
    });
}

Interpretations belief_update_models(const Interpretations& phi_models, const Interpretations& mu_models,
                                     const ClassicalOrderAssignment& o) {
    Interpretations out;
    for (auto i : phi_models)
        for (auto j : minima(mu_models, i, o))
            out.push_back(j);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Interpretations belief_update_models(const Formula& phi, const Formula& mu, const Alphabet& alphabet) {
    return belief_update_models(classical_models(phi, alphabet), classical_models(mu, alphabet), ClassicalWinslett{});
}

bool query(const Program& p, const Program& u, const Program& q, const PreorderAssignment& o) {
    require_same_alphabet(p, u);
    require_same_alphabet(p, q);
    const auto& a = p.alphabet();
    return se_update_models(se_models(p), se_models(u), o, &a).subset_of(se_models(q));
}

SEModelSet definite_se_models(const Program& program) {
    if (!program.is_definite())
        throw PreconditionError("program is not definite");
    const auto models = classical_models(program);
    SEModelSet out(program.alphabet().size());
    for (auto j : models)
        for (auto i : models)
            if (i.subset_of(j))
                out.insert(SEInterpretation(i, j));
    return out;
}

bool definite_query(const Program& p, const Program& u, const Program& q, const PreorderAssignment& o) {
    require_same_alphabet(p, u);
    require_same_alphabet(p, q);
    const auto& a = p.alphabet();
    return se_update_models(definite_se_models(p), definite_se_models(u), o, &a).subset_of(definite_se_models(q));
}

std::shared_ptr<const TableAssignment> generated_assignment(const UpdateOperator& op, const Alphabet& alphabet) {
    const std::size_t n = alphabet.size();
    const std::size_t points = se_universe_size(n);
    std::map<SEModelSet, Program> synt;
    auto program_for = [&](std::initializer_list<SEInterpretation> members) -> const Program& {
        SEModelSet s(n, members);
        auto it = synt.find(s);
        if (it == synt.end())
            it = synt.emplace(s, realize(s, alphabet)).first;
        return it->second;
    };

    // relation[x][y * points + z]: Y strictly precedes Z as seen by the operator from X.
    std::vector<std::vector<bool>> relation(points, std::vector<bool>(points * points, false));
    for (std::size_t xi = 0; xi < points; ++xi) {
        const auto x = se_from_index(xi, n);
        const Program& px = program_for({x});
        std::map<SEModelSet, SEModelSet> updated;
        auto models_after = [&](const SEInterpretation& a, const SEInterpretation& b) -> const SEModelSet& {
            SEModelSet key(n, {a, b});
            auto it = updated.find(key);
            if (it == updated.end())
                it = updated.emplace(key, se_models(op(px, program_for({a, b})))).first;
            return it->second;
        };
        auto& rel = relation[xi];
        for (std::size_t yi = 0; yi < points; ++yi) {
            const auto y = se_from_index(yi, n);
            for (std::size_t zi = 0; zi < points; ++zi) {
                const auto z = se_from_index(zi, n);
                const auto& with_pair = models_after(y, z);
                bool precedes = with_pair.contains(y) && !with_pair.contains(z);
                if (precedes && !y.is_total())
                    precedes = models_after(y.star(), z).contains(z);
                rel[yi * points + zi] = precedes;
            }
        }
        // Reflexive and transitive closure.
        for (std::size_t k = 0; k < points; ++k)
            rel[k * points + k] = true;
        for (std::size_t k = 0; k < points; ++k)
            for (std::size_t i = 0; i < points; ++i)
                if (rel[i * points + k])
                    for (std::size_t j = 0; j < points; ++j)
                        if (rel[k * points + j])
                            rel[i * points + j] = true;
    }
    return std::make_shared<const TableAssignment>(
        n,
        [&](const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) {
            return relation[se_index(x, n)][se_index(y, n) * points + se_index(z, n)];
        },
        "generated(" + op.name() + ")");
}

} // namespace seupdate
