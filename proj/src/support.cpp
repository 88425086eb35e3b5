#include "seupdate/support.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/random.hpp"
#include "seupdate/realization.hpp"

#include <algorithm>

#include <stdexcept>

namespace seupdate {

bool is_supported(const Program& rules, std::size_t atom, Interpretation j) {
    for (const auto& r : rules.rules())
        if (r.head_pos.contains(atom) && r.body_satisfied_by(j))
            return true;
    return false;
}

SupportVerdict respects_support_instance(const UpdateOperator& op, const Program& p, const Program& u) {
    require_same_alphabet(p, u);
    const Program rules = p.united_with(u);
    SupportVerdict out;
    for (auto j : answer_sets(op(p, u)))
        for (auto atom : j.atoms())
            if (!is_supported(rules, atom, j))
                out.failures.emplace_back(j, atom);
    out.holds = out.failures.empty();
    return out;
}

bool is_consistent_facts(const Program& program) {
    AtomSet positive, negative;
    for (const auto& r : program.rules()) {
        if (!r.is_fact())
            return false;
        positive |= r.head_pos;
        negative |= r.head_neg;
    }
    return !positive.intersects(negative);
}

FactUpdateVerdict respects_fact_update_instance(const UpdateOperator& op, const Program& p, const Program& u) {
    require_same_alphabet(p, u);
    if (!is_consistent_facts(p) || !is_consistent_facts(u))
        throw PreconditionError("fact update is defined for consistent sets of facts only");
    AtomSet asserted, retracted;
    for (const auto& r : p.rules())
        asserted |= r.head_pos;
    for (const auto& r : u.rules())
        asserted |= r.head_pos;
    for (const auto& r : u.rules())
        retracted |= r.head_neg;

    FactUpdateVerdict out;
    out.expected = asserted - retracted;
    out.answer_sets = answer_sets(op(p, u));
    out.holds = out.answer_sets == Interpretations{out.expected};
    return out;
}

std::string to_string(ImpossibilityReport::Outcome outcome) {
    switch (outcome) {
    case ImpossibilityReport::Outcome::support_fails: return "support fails";
    case ImpossibilityReport::Outcome::fact_update_fails: return "fact update fails";
    case ImpossibilityReport::Outcome::both_fail: return "support and fact update fail";
    case ImpossibilityReport::Outcome::p4_violated: return "P4 violated";
    }
    return "?";
}

namespace {

std::string describe(const Interpretations& sets, const Alphabet& a) {
    std::string out = "[";
    for (std::size_t k = 0; k < sets.size(); ++k)
        out += (k ? ", " : "") + a.format(sets[k]);
    return out + "]";
}

std::string describe(const SupportVerdict& v, const Alphabet& a) {
    if (v.holds)
        return "respected";
    std::string out = "violated:";
    for (const auto& [j, atom] : v.failures)
        out += " " + a.name(atom) + " in " + a.format(j) + " has no supporting rule;";
    out.pop_back();
    return out;
}

} // namespace

ImpossibilityReport impossibility_demo(const UpdateOperator& op) {
    const Alphabet a{"p", "q"};
    const Program p = parse_program("p. q.", a);
    const Program q = parse_program("p :- q. q.", a);
    const Program u = parse_program("~q.", a);

    ImpossibilityReport r;
    r.originals_equivalent = strongly_equivalent(p, q);
    r.p_update_models = se_models(op(p, u));
    r.q_update_models = se_models(op(q, u));
    r.p4_instance = r.p_update_models == r.q_update_models;
    r.fact_update = respects_fact_update_instance(op, p, u);
    r.support_p = respects_support_instance(op, p, u);
    r.support_q = respects_support_instance(op, q, u);

    const bool support_fails = !r.support_p.holds || !r.support_q.holds;
    const bool fact_fails = !r.fact_update.holds;
    if (!r.p4_instance)
        r.outcome = ImpossibilityReport::Outcome::p4_violated;
    else if (support_fails && fact_fails)
        r.outcome = ImpossibilityReport::Outcome::both_fail;
    else if (support_fails)
        r.outcome = ImpossibilityReport::Outcome::support_fails;
    else if (fact_fails)
        r.outcome = ImpossibilityReport::Outcome::fact_update_fails;
    else
        throw std::logic_error("operator agrees on P and Q yet respects both support and fact update");

    std::string& n = r.narrative;
    n += "operator: " + op.name() + "\n";
    n += "alphabet: " + a.format(a.full()) + "\n";
    n += "P = {p. q.}, Q = {p :- q. q.}, U = {~q.}\n";
    n += std::string("P and Q strongly equivalent: ") + (r.originals_equivalent ? "yes" : "no") + "\n";
    n += "SE(P + U) = " + r.p_update_models.to_string(a) + "\n";
    n += "SE(Q + U) = " + r.q_update_models.to_string(a) + "\n";
    n += std::string("P4 on this instance: ") + (r.p4_instance ? "holds" : "violated") + "\n";
    n += "fact update on (P, U): expected " + a.format(r.fact_update.expected) + ", answer sets " +
         describe(r.fact_update.answer_sets, a) + " -> " + (r.fact_update.holds ? "respected" : "violated") + "\n";
    n += "support on (P, U): " + describe(r.support_p, a) + "\n";
    n += "support on (Q, U): " + describe(r.support_q, a) + "\n";
    n += "outcome: " + to_string(r.outcome);
    return r;
}

} // namespace seupdate

namespace seupdate {

namespace {

/// Every set of facts with at most one polarity per atom, 3^n of them.
std::vector<Program> all_consistent_facts(const Alphabet& a) {
    std::vector<Program> out;
    std::size_t count = 1;
    for (std::size_t k = 0; k < a.size(); ++k)
        count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<Rule> rules;
        for (std::size_t atom = 0, c = code; atom < a.size(); ++atom, c /= 3) {
            if (c % 3 == 1)
                rules.push_back(Rule{AtomSet::singleton(atom), {}, {}, {}});
            else if (c % 3 == 2)
                rules.push_back(Rule{{}, AtomSet::singleton(atom), {}, {}});
        }
        out.emplace_back(a, std::move(rules));
    }
    return out;
}

void record_failure(PostulateResult& r, const Program& p, const Program& u, std::string reason) {
    if (r.verdict == Verdict::fails)
        return;
    r.verdict = Verdict::fails;
    r.witness = {{"P", render_program(p)}, {"U", render_program(u)}};
    r.reason = std::move(reason);
}

void try_support(PostulateResult& r, const UpdateOperator& op, const Program& p, const Program& u) {
    ++r.instances;
    if (r.verdict == Verdict::fails)
        return;
    const auto v = respects_support_instance(op, p, u);
    if (v.holds)
        return;
    const auto& a = p.alphabet();
    const auto& [j, atom] = v.failures.front();
    record_failure(r, p, u, "atom " + a.name(atom) + " of answer set " + a.format(j) + " has no supporting rule in P | U");
}

void try_fact_update(PostulateResult& r, const UpdateOperator& op, const Program& p, const Program& u) {
    ++r.instances;
    if (r.verdict == Verdict::fails)
        return;
    const auto v = respects_fact_update_instance(op, p, u);
    if (v.holds)
        return;
    const auto& a = p.alphabet();
    record_failure(r, p, u, "expected the single answer set " + a.format(v.expected) + ", got " + describe(v.answer_sets, a));
}

} // namespace

PostulateReport check_support_and_fact_update(const UpdateOperator& op, std::size_t atom_count, const CheckMode& mode) {
    if (atom_count == 0)
        throw AlphabetError("support checking needs a non-empty alphabet");
    require_enumerable(atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    PostulateReport report{op.name(), atom_count, {}, {}};
    PostulateResult support{"support", Verdict::holds, 0, {}, {}};
    PostulateResult facts{"fact-update", Verdict::holds, 0, {}, {}};

    if (atom_count >= 2) {
        const auto fact = [](std::size_t atom) { return Rule{AtomSet::singleton(atom), {}, {}, {}}; };
        const Program p(a, {fact(0), fact(1)});
        const Program q(a, {Rule{AtomSet::singleton(0), {}, AtomSet::singleton(1), {}}, fact(1)});
        const Program u(a, {Rule{{}, AtomSet::singleton(1), {}, {}}});
        try_support(support, op, p, u);
        try_support(support, op, q, u);
    }

    if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
        if (atom_count > std::min(ex->max_alphabet, kMaxExhaustiveAtoms))
            throw UnsupportedSizeError("exhaustive support checking supports at most " +
                                       std::to_string(std::min(ex->max_alphabet, kMaxExhaustiveAtoms)) + " atoms");
        report.mode = "exhaustive";
        std::vector<Program> representatives;
        for (const auto& s : all_well_defined_sets(atom_count))
            representatives.push_back(realize(s, a));
        for (const auto& p : representatives)
            for (const auto& u : representatives)
                try_support(support, op, p, u);
        const auto all = all_consistent_facts(a);
        for (const auto& p : all)
            for (const auto& u : all) {
                try_support(support, op, p, u);
                try_fact_update(facts, op, p, u);
            }
    } else {
        const auto& sm = std::get<Sampled>(mode);
        report.mode = "sampled(seed=" + std::to_string(sm.seed) + ", samples=" + std::to_string(sm.samples) + ")";
        Rng rng(sm.seed);
        for (std::size_t s = 0; s < sm.samples; ++s) {
            const auto p = random_program(a, rng), u = random_program(a, rng);
            try_support(support, op, p, u);
            const auto fp = random_facts(a, rng), fu = random_facts(a, rng);
            try_support(support, op, fp, fu);
            try_fact_update(facts, op, fp, fu);
        }
        for (auto* r : {&support, &facts})
            if (r->verdict == Verdict::holds)
                r->verdict = Verdict::no_counterexample;
    }
    report.results = {support, facts};
    return report;
}

} // namespace seupdate
