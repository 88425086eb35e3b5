#include "helpers.hpp"
#include "oracle.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/random.hpp"
#include "seupdate/realization.hpp"
#include "seupdate/update.hpp"

#include <doctest.h>

using namespace seupdate;
using testing::prog;
using testing::se;
using testing::se_set;

namespace {

/// Program over the first `used` atoms of `a`, lifted to all of `a`.
Program program_on(const Alphabet& a, std::size_t used, Rng& rng, std::size_t max_rules = 4) {
    return random_program(standard_alphabet(used), rng, max_rules).over(a);
}

/// Alphabet of the atoms occurring in `p`, with `p` restated over it; the
/// atoms keep their relative order, so positions map monotonically.
Alphabet atoms_of(const Program& p) {
    std::vector<std::string> names;
    for (auto i : relevant_atoms(p).atoms())
        names.push_back(p.alphabet().name(i));
    return Alphabet(names);
}

} // namespace

TEST_SUITE("update") {

TEST_CASE("the impossibility programs update to <{p},{p}>") {
    const Alphabet a{"p", "q"};
    const WinslettAssignment w;
    const auto u = prog("~q.", a);
    for (const auto* text : {"p. q.", "p :- q. q."}) {
        const auto result = se_update(prog(text, a), u, w);
        CHECK(se_models(result) == se_set(a, {"<{p},{p}>"}));
        CHECK(oracle::update(oracle::se_models(prog(text, a)), oracle::se_models(u)) ==
              oracle::convert(se_models(result), a));
        CHECK(answer_sets(result) == Interpretations{a.set_of({"p"})});
    }
}

TEST_CASE("updating by the empty program keeps the original") {
    Rng rng(79);
    const WinslettAssignment w;
    for (int k = 0; k < 100; ++k) {
        const auto a = standard_alphabet(1 + k % 3);
        const auto p = random_program(a, rng);
        CHECK(strongly_equivalent(se_update(p, Program(a), w), p));
    }
}

TEST_CASE("characterisation identity against the oracle") {
    Rng rng(83);
    const auto op = winslett_operator();
    for (int k = 0; k < 300; ++k) {
        const auto a = standard_alphabet(1 + k % 4);
        const auto p = random_program(a, rng), u = random_program(a, rng);
        const auto result = op(p, u);
        CHECK(oracle::convert(se_models(result), a) == oracle::update(oracle::se_models(p), oracle::se_models(u)));
        CHECK(se_models(result) == se_update_models(se_models(p), se_models(u), WinslettAssignment{}));
    }
}

TEST_CASE("an assignment that is not well-defined is reported with its X") {
    const Alphabet a{"p"};
    const auto low = se("<{},{p}>", a), high = se("<{p},{p}>", a);
    auto table = std::make_shared<const TableAssignment>(
        1, [&](const SEInterpretation&, const SEInterpretation& y, const SEInterpretation& z) {
            return y == z || (y == low && z == high);
        });
    const auto op = characterised_by(table);
    const auto m = se_set(a, {"<{},{p}>", "<{p},{p}>"});
    try {
        se_update_models(se_set(a, {"<{p},{p}>"}), m, *table, &a);
        FAIL("expected a well-definedness error");
    } catch (const WellDefinednessError& e) {
        CHECK(std::string(e.what()).find("X = <{p},{p}>") != std::string::npos);
    }
    CHECK_THROWS_AS(op(prog("p.", a), realize(m, a)), WellDefinednessError);
}

TEST_CASE("alphabet checks") {
    CHECK_THROWS_AS(se_update(prog("p.", Alphabet{"p"}), prog("p.", Alphabet{"p", "q"}), WinslettAssignment{}),
                    AlphabetError);
    const TableAssignment t(1, WinslettAssignment{});
    CHECK_THROWS_AS(se_update(prog("p.", Alphabet{"p", "q"}), prog("q.", Alphabet{"p", "q"}), t), AlphabetError);
}

TEST_CASE("Winslett belief update") {
    const Alphabet a{"p", "q", "r"};
    const auto p = Formula::atom(0), q = Formula::atom(1), r = Formula::atom(2);
    CHECK(belief_update_models(p && iff(q, r), q || r, a) ==
          Interpretations{a.set_of({"p", "q"}), a.set_of({"p", "r"}), a.set_of({"p", "q", "r"})});
    CHECK(belief_update_models(p && !p, q, a).empty());
    CHECK(belief_update_models(p && q, p, a) == classical_models(p && q, a));

    Rng rng(89);
    for (int k = 0; k < 200; ++k) {
        const auto b = standard_alphabet(1 + k % 4);
        const auto phi = to_formula(random_program(b, rng)), mu = to_formula(random_program(b, rng));
        oracle::Worlds ph, m, got;
        for (auto i : classical_models(phi, b))
            ph.insert(oracle::names(i, b));
        for (auto i : classical_models(mu, b))
            m.insert(oracle::names(i, b));
        for (auto i : belief_update_models(phi, mu, b))
            got.insert(oracle::names(i, b));
        CHECK(got == oracle::belief_update(ph, m));
    }
}

TEST_CASE("query answering") {
    const Alphabet a{"p", "q"};
    const WinslettAssignment w;
    const auto p = prog("p. q.", a), u = prog("~q.", a);
    CHECK(query(p, u, prog("p.", a), w));
    CHECK_FALSE(query(p, u, prog("q.", a), w));
    Rng rng(97);
    for (int k = 0; k < 50; ++k)
        CHECK(query(random_program(a, rng), random_program(a, rng), Program(a), w));
}

TEST_CASE("definite query answering") {
    const WinslettAssignment w;
    const Alphabet ap{"p"};
    CHECK(definite_query(prog("p.", ap), prog("p :- p.", ap), prog("p.", ap), w));
    CHECK(definite_query(prog("p.", ap), prog("p :- p.", ap), Program(ap), w));
    const Alphabet a{"p", "q"};
    CHECK(definite_query(prog("p. q.", a), prog("q :- p.", a), prog("p.", a), w));
    CHECK_THROWS_AS(definite_query(prog("p.", a), prog("~q.", a), prog("p.", a), w), PreconditionError);

    Rng rng(101);
    for (int k = 0; k < 300; ++k) {
        const auto b = standard_alphabet(1 + k % 4);
        auto definite = [&] {
            Program out(b);
            const auto source = random_program(b, rng);
            for (const auto& r : source.rules())
                if (!r.head_pos.empty())
                    out.add(Rule{AtomSet::singleton(r.head_pos.atoms().back()), {}, r.body_pos, {}});
            return out;
        };
        const auto p = definite(), u = definite(), q = definite();
        CHECK(definite_se_models(p) == se_models(p));
        CHECK(definite_query(p, u, q, w) == query(p, u, q, w));
    }
}

TEST_CASE("updates by strongly equivalent programs coincide") {
    const Alphabet a{"p", "q"};
    const auto u = prog("~p :- q.", a), v = prog("~q :- p.", a);
    CHECK(strongly_equivalent(u, v));
    const auto p = prog("p. q.", a);
    const WinslettAssignment w;
    CHECK(strongly_equivalent(se_update(p, u, w), se_update(p, v, w)));
}

TEST_CASE("total SE-models of the update are the Winslett belief update") {
    Rng rng(103);
    const WinslettAssignment w;
    for (int k = 0; k < 300; ++k) {
        const auto a = standard_alphabet(1 + k % 4);
        const auto p = random_program(a, rng), u = random_program(a, rng);
        CHECK(se_models(se_update(p, u, w)).total_members() ==
              belief_update_models(to_formula(p), to_formula(u), a));
    }
}

TEST_CASE("fact queries reduce to belief update") {
    Rng rng(107);
    const WinslettAssignment w;
    for (int k = 0; k < 300; ++k) {
        const auto a = standard_alphabet(1 + k % 4);
        const auto p = random_facts(a, rng);
        if (p.empty())
            continue;
        Program q(a);
        for (const auto& r : p.rules())
            if (coin(rng))
                q.add(r);
        const auto small = atoms_of(p);
        const auto u = random_program(small, rng).over(a);
        REQUIRE(relevant_atoms(u).subset_of(relevant_atoms(p)));
        const auto updated = belief_update_models(to_formula(p), to_formula(u), a);
        bool entailed = true;
        for (auto l : updated)
            entailed &= to_formula(q).evaluate(l);
        CHECK(query(p, u, q, w) == entailed);
    }
}

TEST_CASE("atoms irrelevant to the update keep their truth value") {
    Rng rng(109);
    const WinslettAssignment w;
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
        const auto a = standard_alphabet(n);
        const auto p = random_program(a, rng);
        const auto u = program_on(a, 1 + k % (n - 1), rng);
        const auto outside = a.full() - relevant_atoms(u);
        const auto sp = se_models(p), su = se_models(u);
        for (const auto& x : sp)
            for (const auto& z : minima(su, x, w))
                for (auto atom : outside.atoms())
                    CHECK(truth_value(x, atom) == truth_value(z, atom));
    }
}

TEST_CASE("updates are closed under substitution of unused atoms") {
    Rng rng(113);
    const WinslettAssignment w;
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
        const auto a = standard_alphabet(n);
        const std::size_t used = 1 + k % (n - 1);
        const auto p = program_on(a, used, rng), u = program_on(a, used, rng);
        const auto unused = a.full() - (relevant_atoms(p) | relevant_atoms(u));
        const auto result = se_models(se_update(p, u, w));
        for (const auto& z : result)
            for (auto atom : unused.atoms())
                for (auto v : {TruthValue::t, TruthValue::u, TruthValue::f})
                    CHECK(result.contains(substitute(z, atom, v)));
    }
}

TEST_CASE("positive facts stay two-valued") {
    Rng rng(127);
    const WinslettAssignment w;
    for (int k = 0; k < 300; ++k) {
        const auto a = standard_alphabet(1 + k % 4);
        const auto p = random_facts(a, rng);
        if (p.empty())
            continue;
        const auto u = random_program(atoms_of(p), rng).over(a);
        AtomSet positive;
        for (const auto& r : p.rules())
            positive |= r.head_pos;
        for (const auto& z : se_models(se_update(p, u, w)))
            for (auto atom : positive.atoms())
                CHECK(truth_value(z, atom) != TruthValue::u);
    }
}

TEST_CASE("projection and rule rejection") {
    const Alphabet a{"p", "q"};
    const auto proj = projection_operator();
    CHECK(proj(prog("p. q.", a), prog("~q.", a)) == prog("~q.", a));
    const auto rej = rule_rejection_operator();
    CHECK(rej(prog("p. q.", a), prog("~q.", a)) == prog("p. ~q.", a));
    CHECK(rej(prog("p :- q. q.", a), prog("~q.", a)) == prog("p :- q. ~q.", a));
    CHECK(rej(prog("p ; q :- ~p.", a), prog("~q.", a)) == prog("~q.", a));
}

} // TEST_SUITE
