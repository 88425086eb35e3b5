#include "seupdate/random.hpp"

#include "seupdate/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace seupdate {

std::size_t uniform_below(Rng& rng, std::size_t bound) {
    if (bound <= 1)
        return 0;
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v > limit);
    return static_cast<std::size_t>(v % bound);
}

bool coin(Rng& rng, double p_true) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p_true;
}

SEModelSet random_well_defined_set(std::size_t atom_count, Rng& rng, double density) {
    SEModelSet out(atom_count);
    for (AtomSet::Bits jb = 0; jb < (AtomSet::Bits{1} << atom_count); ++jb) {
        if (!coin(rng))
            continue;
        const AtomSet j{jb};
        out.insert(SEInterpretation::total(j));
        if (jb == 0)
            continue;
        for (AtomSet::Bits ib = (jb - 1) & jb;; ib = (ib - 1) & jb) {
            if (coin(rng, density))
                out.insert(SEInterpretation(AtomSet{ib}, j));
            if (ib == 0)
                break;
        }
    }
    return out;
}

Rule random_rule(std::size_t atom_count, Rng& rng, double p) {
    Rule r;
    for (std::size_t a = 0; a < atom_count; ++a) {
        if (coin(rng, p))
            r.head_pos = r.head_pos.with(a);
        if (coin(rng, p))
            r.head_neg = r.head_neg.with(a);
        if (coin(rng, p))
            r.body_pos = r.body_pos.with(a);
        if (coin(rng, p))
            r.body_neg = r.body_neg.with(a);
    }
    return r;
}

Program random_program(const Alphabet& alphabet, Rng& rng, std::size_t max_rules) {
    const std::size_t count = uniform_below(rng, max_rules + 1);
    std::vector<Rule> rules;
    for (std::size_t k = 0; k < count; ++k)
        rules.push_back(random_rule(alphabet.size(), rng));
    return Program(alphabet, std::move(rules));
}

Program random_facts(const Alphabet& alphabet, Rng& rng, bool positive_only) {
    std::vector<Rule> rules;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        switch (uniform_below(rng, 3)) {
        case 0: rules.push_back(Rule{AtomSet::singleton(a), {}, {}, {}}); break;
        case 1:
            if (!positive_only)
                rules.push_back(Rule{{}, AtomSet::singleton(a), {}, {}});
            break;
        default: break;
        }
    }
    return Program(alphabet, std::move(rules));
}

Program syntactic_variant(const Program& program, Rng& rng) {
    const std::size_t n = program.alphabet().size();
    const SEModelSet target = se_models(program);
    Program out = program;

    // Consequences of the program.
    const std::size_t wanted = uniform_below(rng, 3);
    for (std::size_t attempt = 0, added = 0; attempt < 40 && added < wanted; ++attempt) {
        const Rule r = random_rule(n, rng, 0.3);
        if (out.contains(r))
            continue;
        if (target.subset_of(se_models(Program(program.alphabet(), {r})))) {
            out.add(r);
            ++added;
        }
    }

    // A tautology: an atom shared by head and positive body, or a body that
    // contradicts itself.
    if (n > 0 && coin(rng)) {
        const std::size_t a = uniform_below(rng, n);
        Rule r = random_rule(n, rng, 0.2);
        if (coin(rng)) {
            r.head_pos = r.head_pos.with(a);
            r.body_pos = r.body_pos.with(a);
        } else {
            r.body_pos = r.body_pos.with(a);
            r.body_neg = r.body_neg.with(a);
        }
        out.add(r);
    }

    // Drop rules that the rest already implies.
    std::vector<Rule> order = out.rules();
    for (std::size_t k = order.size(); k > 1; --k)
        std::swap(order[k - 1], order[uniform_below(rng, k)]);
    for (const auto& r : order) {
        if (!coin(rng))
            continue;
        std::vector<Rule> rest;
        for (const auto& other : out.rules())
            if (other != r)
                rest.push_back(other);
        Program candidate(program.alphabet(), std::move(rest));
        if (se_models(candidate) == target)
            out = std::move(candidate);
    }

    if (se_models(out) != target)
        throw std::logic_error("syntactic variant changed the SE-models");
    return out;
}

Alphabet standard_alphabet(std::size_t atom_count) {
    static const char* const readable[] = {"p", "q", "r", "s"};
    std::vector<std::string> names;
    for (std::size_t k = 0; k < atom_count; ++k)
        names.push_back(atom_count <= 4 ? std::string(readable[k]) : (k < 10 ? "a0" : "a") + std::to_string(k));
    return Alphabet(std::move(names));
}

} // namespace seupdate
