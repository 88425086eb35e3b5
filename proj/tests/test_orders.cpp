#include "helpers.hpp"
#include "oracle.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/orders.hpp"
#include "seupdate/random.hpp"
#include "seupdate/realization.hpp"
#include "seupdate/update.hpp"

#include <doctest.h>

#include <optional>

using namespace seupdate;
using testing::se;
using testing::se_set;

namespace {

oracle::SE named(const SEInterpretation& x, const Alphabet& a) {
    return {oracle::names(x.here(), a), oracle::names(x.there(), a)};
}

/// Brute-force paired minima for an arbitrary leq.
SEModelSet paired(const SEModelSet& m, const SEInterpretation& x, const PreorderAssignment& o) {
    SEModelSet out(m.atom_count());
    for (const auto& from : {x, x.star()})
        for (const auto& y : m) {
            bool dominated = false;
            for (const auto& z : m)
                if (o.leq(from, z, y) && !o.leq(from, y, z))
                    dominated = true;
            if (!dominated)
                out.insert(y);
        }
    return out;
}

/// X and X* tie at the bottom for every X; elsewhere Winslett. Semi-faithful, not faithful.
class TiedAssignment final : public PreorderAssignment {
public:
    bool leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const override {
        auto bottom = [&](const SEInterpretation& w) { return w == x || w == x.star(); };
        return bottom(y) || (!bottom(z) && winslett_se_leq(x, y, z));
    }
    std::string name() const override { return "tied"; }
};

/// Every X uses the order of X*. Breaks the second semi-faithfulness condition.
class StarredAssignment final : public PreorderAssignment {
public:
    bool leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const override {
        return winslett_se_leq(x.star(), y, z);
    }
    std::string name() const override { return "starred"; }
};

class TrivialAssignment final : public PreorderAssignment {
public:
    bool leq(const SEInterpretation&, const SEInterpretation&, const SEInterpretation&) const override { return true; }
    std::string name() const override { return "trivial"; }
};

} // namespace

TEST_SUITE("orders") {

TEST_CASE("worked example of the Winslett SE assignment") {
    const Alphabet a{"p", "q", "r", "s"};
    const WinslettAssignment w;
    const auto x = se("<{p},{p,q}>", a);
    const auto y = se("<{p},{p,r}>", a);
    const auto z1 = se("<{p},{p,r,s}>", a);
    const auto z2 = se("<{},{p,r}>", a);
    const auto z3 = se("<{p,r},{p,r}>", a);
    CHECK(w.less(x, y, z1));
    CHECK(w.less(x, y, z2));
    CHECK(w.leq(x, y, z3));
    CHECK(w.leq(x, z3, y));
    CHECK(y != z3);
    CHECK(strict_via_lemma(x, y, z1));
    CHECK(strict_via_lemma(x, y, z2));
    CHECK_FALSE(strict_via_lemma(x, y, z3));
    CHECK_FALSE(strict_via_lemma(x, z3, y));
    CHECK_FALSE(strict_via_lemma(x, x, x));
    for (const auto& [u, v] : {std::pair{y, z1}, {y, z2}, {y, z3}, {z3, y}})
        CHECK(w.leq(x, u, v) == oracle::winslett_leq(named(x, a), named(u, a), named(v, a)));
}

TEST_CASE("Winslett SE assignment agrees with the oracle and the closed-form strict relation") {
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto a = standard_alphabet(n);
        const auto all = SEModelSet::universe(n).members();
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    const bool leq = winslett_se_leq(x, y, z);
                    CHECK(leq == oracle::winslett_leq(named(x, a), named(y, a), named(z, a)));
                    CHECK(strict_via_lemma(x, y, z) == (leq && !winslett_se_leq(x, z, y)));
                }
    }
}

TEST_CASE("Winslett SE assignment is a preorder") {
    const WinslettAssignment w;
    CHECK(check_preorder(w, 1).holds());
    CHECK(check_preorder(w, 2).holds());
    Rng rng(71);
    for (int k = 0; k < 20000; ++k) {
        const std::size_t n = 3 + static_cast<std::size_t>(k % 2);
        auto pick = [&] { return se_from_index(uniform_below(rng, se_universe_size(n)), n); };
        const auto x = pick(), y = pick(), z = pick(), v = pick();
        CHECK(w.leq(x, y, y));
        if (w.leq(x, y, z) && w.leq(x, z, v))
            CHECK(w.leq(x, y, v));
        CHECK(strict_via_lemma(x, y, z) == w.less(x, y, z));
    }
}

TEST_CASE("classical Winslett order") {
    const Alphabet a{"p", "q", "r"};
    const auto i = a.set_of({"p"});
    auto diff_leq = [&](std::initializer_list<std::string_view> j, std::initializer_list<std::string_view> k) {
        const auto dj = oracle::symdiff(oracle::names(a.set_of(j), a), {"p"});
        const auto dk = oracle::symdiff(oracle::names(a.set_of(k), a), {"p"});
        return oracle::includes(dk, dj);
    };
    CHECK(winslett_classical_leq(i, a.set_of({"p", "q"}), a.set_of({"q", "r"})));
    CHECK(diff_leq({"p", "q"}, {"q", "r"}));
    CHECK_FALSE(winslett_classical_leq(i, a.set_of({"q"}), a.set_of({"r"})));
    CHECK_FALSE(diff_leq({"q"}, {"r"}));
    for (AtomSet::Bits k = 0; k < 8; ++k)
        CHECK(winslett_classical_leq(i, i, AtomSet{k}));
    CHECK(is_faithful(ClassicalWinslett{}, 3));
}

TEST_CASE("minima") {
    const WinslettAssignment w;
    CHECK(minima(SEModelSet(2), SEInterpretation::total(AtomSet{}), w).empty());

    const Alphabet a{"p", "q", "r"};
    const auto q = Formula::atom(1), r = Formula::atom(2);
    CHECK(minima(classical_models(q || r, a), a.set_of({"p"}), ClassicalWinslett{}) ==
          Interpretations{a.set_of({"p", "q"}), a.set_of({"p", "r"})});

    const Alphabet b{"p", "q"};
    CHECK(minima(se_models(parse_program("~q.", b)), se("<{p,q},{p,q}>", b), w) == se_set(b, {"<{p},{p}>"}));

    Rng rng(73);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
        const auto an = standard_alphabet(n);
        const auto m = random_well_defined_set(n, rng);
        const auto x = se_from_index(uniform_below(rng, se_universe_size(n)), n);
        const auto mins = minima(m, x, w);
        CHECK(oracle::convert(mins, an) == oracle::minima(oracle::convert(m, an), named(x, an)));
        CHECK(mins.subset_of(m));
        CHECK(mins.empty() == m.empty());
        if (m.contains(x))
            CHECK(mins == SEModelSet(n, {x}));
    }
}

TEST_CASE("faithfulness") {
    const WinslettAssignment w;
    CHECK(is_faithful(w, 1));
    CHECK(is_faithful(w, 2));
    CHECK_FALSE(is_faithful(TrivialAssignment{}, 1));
    CHECK_FALSE(is_faithful(TiedAssignment{}, 1));
}

TEST_CASE("semi-faithfulness") {
    CHECK(is_semi_faithful(WinslettAssignment{}, 2));
    CHECK_FALSE(is_semi_faithful(TrivialAssignment{}, 1));
    CHECK(is_semi_faithful(TiedAssignment{}, 2));
    CHECK_FALSE(is_semi_faithful(StarredAssignment{}, 1));
}

TEST_CASE("no Y lies strictly below X under a semi-faithful assignment") {
    const WinslettAssignment winslett;
    const TiedAssignment tied;
    for (const PreorderAssignment* o : {static_cast<const PreorderAssignment*>(&winslett),
                                        static_cast<const PreorderAssignment*>(&tied)}) {
        REQUIRE(is_semi_faithful(*o, 2));
        for (const auto& x : SEModelSet::universe(2))
            for (const auto& y : SEModelSet::universe(2))
                CHECK_FALSE(o->less(x, y, x));
    }
}

TEST_CASE("organisation") {
    const WinslettAssignment w;
    CHECK(is_organised(w, 1));
    CHECK(is_organised(w, 2));
    CHECK_THROWS_AS(check_organised(w, 3), UnsupportedSizeError);
    CHECK_THROWS_AS(check_organised(w, 2, Exhaustive{1}), UnsupportedSizeError);
    const auto sampled = check_organised(w, 3, Sampled{5, 300});
    CHECK(sampled.verdict == Verdict::no_counterexample);
    CHECK(sampled.instances == 300);
}

TEST_CASE("an assignment violating organisation is found by search") {
    // Rank-based assignments on one atom: each X ranks the three
    // SE-interpretations with values 0..2, lower is better.
    const auto all = SEModelSet::universe(1).members();
    const auto sets = all_well_defined_sets(1);
    std::optional<TableAssignment> found;
    for (std::size_t code = 0; code < 27 * 27 * 27 && !found; ++code) {
        auto rank = [code](std::size_t x, std::size_t y) {
            std::size_t c = code;
            for (std::size_t k = 0; k < x * 3 + y; ++k)
                c /= 3;
            return c % 3;
        };
        TableAssignment t(1, [&](const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) {
            return rank(se_index(x, 1), se_index(y, 1)) <= rank(se_index(x, 1), se_index(z, 1));
        });
        if (!is_organised(t, 1))
            found = t;
    }
    REQUIRE(found);
    const auto check = check_organised(*found, 1);
    CHECK(check.failed());
    CHECK_FALSE(check.witness.empty());
    // Independent confirmation: some X, Y and well-defined M, N violate the condition.
    bool violated = false;
    for (const auto& x : all)
        for (const auto& m : sets)
            for (const auto& n : sets) {
                const auto joint = paired(m | n, x, *found);
                for (const auto& y : paired(m, x, *found) & paired(n, x, *found))
                    violated |= !joint.contains(y);
            }
    CHECK(violated);

    // The hand-built instance: <{},{p}> beats <{p},{p}> from X*, <{},{}> beats it from X.
    const Alphabet a{"p"};
    const auto x = se("<{},{p}>", a);
    TableAssignment hand(1, [&](const SEInterpretation& from, const SEInterpretation& y, const SEInterpretation& z) {
        auto rank = [&](const SEInterpretation& s) {
            if (from == x)
                return s == se("<{},{}>", a) ? 0 : 1;
            if (from == x.star())
                return s == se("<{},{p}>", a) ? 0 : 1;
            return 0;
        };
        return rank(y) <= rank(z);
    });
    const auto m = se_set(a, {"<{p},{p}>", "<{},{p}>"});
    const auto n = se_set(a, {"<{p},{p}>", "<{},{}>"});
    const auto yp = se("<{p},{p}>", a);
    CHECK(paired(m, x, hand).contains(yp));
    CHECK(paired(n, x, hand).contains(yp));
    CHECK_FALSE(paired(m | n, x, hand).contains(yp));
    CHECK_FALSE(is_organised(hand, 1));
}

TEST_CASE("well-defined assignments") {
    CHECK(is_well_defined_assignment(WinslettAssignment{}, 1));
    CHECK(is_well_defined_assignment(WinslettAssignment{}, 2));
    const Alphabet a{"p"};
    const auto low = se("<{},{p}>", a), high = se("<{p},{p}>", a);
    TableAssignment prefers_low(1, [&](const SEInterpretation&, const SEInterpretation& y, const SEInterpretation& z) {
        return y == z || (y == low && z == high);
    });
    CHECK_FALSE(is_well_defined_assignment(prefers_low, 1));
    const auto m = se_set(a, {"<{},{p}>", "<{p},{p}>"});
    for (const auto& x : SEModelSet::universe(1))
        CHECK(minima(m, x, prefers_low) == se_set(a, {"<{},{p}>"}));
    for (const auto& x : SEModelSet::universe(1))
        CHECK(paired(SEModelSet(1), x, prefers_low).is_well_defined());
    CHECK(check_well_defined_assignment(WinslettAssignment{}, 3, Sampled{9, 200}).verdict ==
          Verdict::no_counterexample);
}

TEST_CASE("tables validate their relation") {
    CHECK_THROWS_AS(TableAssignment(1, [](const SEInterpretation&, const SEInterpretation& y,
                                          const SEInterpretation& z) { return y < z; }),
                    PreconditionError);
    // Not transitive: a cycle-free but non-closed relation.
    const Alphabet a{"p"};
    CHECK_THROWS_AS(TableAssignment(1,
                                    [&](const SEInterpretation&, const SEInterpretation& y, const SEInterpretation& z) {
                                        return y == z || (y == se("<{},{}>", a) && z == se("<{},{p}>", a)) ||
                                               (y == se("<{},{p}>", a) && z == se("<{p},{p}>", a));
                                    }),
                    PreconditionError);
    const TableAssignment t(2, WinslettAssignment{});
    for (const auto& x : SEModelSet::universe(2))
        for (const auto& y : SEModelSet::universe(2))
            for (const auto& z : SEModelSet::universe(2))
                CHECK(t.leq(x, y, z) == winslett_se_leq(x, y, z));
    CHECK_THROWS_AS(check_faithful(t, 1), AlphabetError);
}

TEST_CASE("faithful-ization") {
    const Alphabet a{"p", "q", "r", "s"};
    const WinslettAssignment w;
    const auto f4 = faithfulize(w, 4);
    const auto x = se("<{p},{p,q}>", a);
    const auto y = se("<{p},{p,r}>", a);
    const auto z3 = se("<{p,r},{p,r}>", a);
    CHECK_FALSE(f4->leq(x, y, z3));
    CHECK_FALSE(f4->leq(x, z3, y));
    for (const auto& v : SEModelSet::universe(4))
        CHECK(f4->leq(x, x, v));

    CHECK_THROWS_AS(faithfulize(StarredAssignment{}, 1), PreconditionError);

    const TiedAssignment tied;
    for (const PreorderAssignment* o :
         {static_cast<const PreorderAssignment*>(&w), static_cast<const PreorderAssignment*>(&tied)}) {
        const auto f = faithfulize(*o, 2);
        CHECK(is_faithful(*f, 2));
        CHECK(check_partial_order(*f, 2).holds());
        CHECK(is_semi_faithful(*f, 2));
        if (is_organised(*o, 2))
            CHECK(is_organised(*f, 2));
        for (const auto& m : all_well_defined_sets(2))
            for (const auto& v : SEModelSet::universe(2))
                CHECK(paired(m, v, *f) == paired(m, v, *o));
    }
}

TEST_CASE("generated assignment") {
    const auto op = winslett_operator();
    const Alphabet a{"p"};
    const auto g = generated_assignment(op, a);
    const auto x = se("<{p},{p}>", a);
    CHECK(g->less(x, x, se("<{},{}>", a)));
    CHECK(se_models(op(realize(SEModelSet(1, {x}), a), realize(se_set(a, {"<{p},{p}>", "<{},{}>"}), a))) ==
          SEModelSet(1, {x}));
    for (const auto& v : SEModelSet::universe(1))
        for (const auto& y : SEModelSet::universe(1))
            CHECK(g->leq(v, y, y));
    CHECK(check_preorder(*g, 1).holds());
    CHECK(is_semi_faithful(*g, 1));
    CHECK(is_organised(*g, 1));

    // Minima reproduce the operator on basic originals and, by union, on all originals.
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto an = standard_alphabet(n);
        const auto gn = n == 1 ? g : generated_assignment(op, an);
        const auto sets = all_well_defined_sets(n);
        for (const auto& v : SEModelSet::universe(n)) {
            const auto basic = realize(SEModelSet(n, {v}), an);
            for (const auto& u : sets)
                CHECK(se_models(op(basic, realize(u, an))) == minima(u, v, *gn));
        }
        for (const auto& p : sets)
            for (const auto& u : sets)
                CHECK(se_update_models(p, u, *gn) == se_models(op(realize(p, an), realize(u, an))));
    }
}

} // TEST_SUITE
