#include "helpers.hpp"
#include "oracle.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/random.hpp"
#include "seupdate/semantics.hpp"

#include <doctest.h>

using namespace seupdate;
using testing::prog;

TEST_SUITE("syntax") {

TEST_CASE("alphabet is sorted, unique and validated") {
    Alphabet a{"q", "p", "q"};
    CHECK(a.names() == std::vector<std::string>{"p", "q"});
    CHECK(a.require("q") == 1);
    CHECK_THROWS_AS(a.require("r"), AlphabetError);
    CHECK_THROWS_AS(Alphabet({"P"}), AlphabetError);
    CHECK_THROWS_AS(Alphabet({"1p"}), AlphabetError);
    CHECK(Alphabet::is_valid_atom_name("a_B9"));
    CHECK(a.format(a.full()) == "{p,q}");
    CHECK(a.merged(Alphabet{"r", "p"}).names() == std::vector<std::string>{"p", "q", "r"});
}

TEST_CASE("parse facts") {
    const auto p = parse_program("p. q.");
    CHECK(p.alphabet() == Alphabet{"p", "q"});
    REQUIRE(p.size() == 2);
    CHECK(p.rules()[0] == Rule{AtomSet{0b01}, {}, {}, {}});
    CHECK(p.rules()[1] == Rule{AtomSet{0b10}, {}, {}, {}});
}

TEST_CASE("parse the general rule form") {
    const auto p = parse_program("p ; ~q :- r, ~s.");
    const auto& a = p.alphabet();
    REQUIRE(p.size() == 1);
    const auto& r = p.rules()[0];
    CHECK(r.head_pos == a.set_of({"p"}));
    CHECK(r.head_neg == a.set_of({"q"}));
    CHECK(r.body_pos == a.set_of({"r"}));
    CHECK(r.body_neg == a.set_of({"s"}));
}

TEST_CASE("parse a constraint and check its models against the oracle") {
    const auto p = parse_program(":- p, ~q.");
    REQUIRE(p.size() == 1);
    const auto& r = p.rules()[0];
    CHECK(r.is_constraint());
    CHECK(r.body_pos == p.alphabet().set_of({"p"}));
    CHECK(r.body_neg == p.alphabet().set_of({"q"}));
    // Models are all J with p not in J or q in J.
    oracle::Worlds expected;
    for (const auto& j : oracle::subsets({"p", "q"}))
        if (!j.count("p") || j.count("q"))
            expected.insert(j);
    oracle::Worlds got;
    for (auto j : classical_models(p))
        got.insert(oracle::names(j, p.alphabet()));
    CHECK(got == expected);
}

TEST_CASE("parser accepts comments, whitespace and empty bodies") {
    const auto p = parse_program("% a comment\n  p :- .\nq;r.% trailing\n\n:- .");
    CHECK(p.size() == 3);
    CHECK(p.contains(Rule{}));
    CHECK(parse_program("") == Program(Alphabet{}));
}

TEST_CASE("parser reports line and column") {
    try {
        parse_program("p.\nq :- r\n", std::nullopt);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_program("p.\n  q :- ,r.");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_program("p :- ~~q."), SyntaxError);
    CHECK_THROWS_AS(parse_program("P."), SyntaxError);
    CHECK_THROWS_AS(parse_program("p"), SyntaxError);
}

TEST_CASE("unknown atoms are rejected when the alphabet is explicit") {
    CHECK_THROWS_AS(parse_program("p :- r.", Alphabet{"p", "q"}), AlphabetError);
    CHECK(parse_program("p.", Alphabet{"p", "q"}).alphabet() == Alphabet{"p", "q"});
}

TEST_CASE("duplicate rules collapse") {
    CHECK(parse_program("p. p. p :- .").size() == 1);
    CHECK(parse_program("p ; q.") == parse_program("q ; p."));
}

TEST_CASE("render") {
    CHECK(render_program(Program(Alphabet{"p"})) == "");
    CHECK(render_program(parse_program("p ; ~q :- r, ~s.")) == "p ; ~q :- r, ~s.");
    CHECK(render_program(parse_program("q. p.")) == "p.\nq.");
    CHECK(render_program(parse_program(":- p, ~q.")) == ":- p, ~q.");
    CHECK(render_program(parse_program(":- .")) == ":-.");
    CHECK(render_program(parse_program("~p.")) == "~p.");
}

TEST_CASE("render then parse is the identity on random programs") {
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const auto a = standard_alphabet(1 + k % 5);
        const auto p = random_program(a, rng, 6);
        CHECK(parse_program(render_program(p), a) == p);
    }
}

TEST_CASE("frm translation") {
    const auto p = parse_program("p ; ~q :- r, ~s.");
    const auto& a = p.alphabet();
    CHECK(to_formula(p.rules()[0]).to_string(a) == "((r & -s) -> (p | -q))");
    const Alphabet ap{"p"};
    CHECK(to_formula(prog("p.", ap).rules()[0]).to_string(ap) == "(T -> p)");
    CHECK(to_formula(prog(":- p.", ap).rules()[0]).to_string(ap) == "(p -> F)");
    CHECK(to_formula(Program(ap)).to_string(ap) == "T");
}

TEST_CASE("frm of a union is the conjunction of frm values") {
    Rng rng(11);
    for (int k = 0; k < 300; ++k) {
        const auto a = standard_alphabet(1 + k % 6);
        const auto p = random_program(a, rng);
        const auto q = random_program(a, rng);
        CHECK(classical_models(to_formula(p.united_with(q)), a) ==
              classical_models(to_formula(p) && to_formula(q), a));
    }
}

TEST_CASE("relevant atoms") {
    const Alphabet a{"p", "q"};
    CHECK(relevant_atoms(Formula::top()).empty());
    CHECK(relevant_atoms(prog("p :- q.", a)) == a.full());
    const auto p = Formula::atom(0);
    CHECK(relevant_atoms(p && !p) == a.set_of({"p"}));
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto b = standard_alphabet(1 + k % 4);
        const auto prg = random_program(b, rng);
        CHECK(relevant_atoms(prg).subset_of(b.full()));
    }
}

TEST_CASE("classify") {
    const Alphabet a{"p", "q"};
    auto cls = [&](std::string_view text) { return classify(prog(text, a).rules()[0]); };
    CHECK(cls("p.") == RuleClass{true, true, true, true});
    const auto neg = cls("~p.");
    CHECK(neg.fact);
    CHECK_FALSE(neg.positive_fact);
    CHECK_FALSE(cls("p ; q.").non_disjunctive);
    CHECK(cls("p :- q.").definite);
    CHECK_FALSE(cls("p :- ~q.").definite);
    CHECK(cls(":- p.").non_disjunctive);
    CHECK_FALSE(cls(":- p.").definite);
    CHECK(prog("p. q :- p.", a).is_definite());
    CHECK_FALSE(prog("p. ~q.", a).is_definite());
    CHECK(prog("p. ~q.", a).is_facts());
}

TEST_CASE("Horn and complete formulas") {
    const auto p = Formula::atom(0), q = Formula::atom(1);
    CHECK((p && (!p || !q)).is_horn());
    CHECK((!p || !q || p).is_horn());
    CHECK_FALSE((p || q).is_horn());
    CHECK((p && !q).is_complete(2));
    CHECK_FALSE(p.is_complete(2));
    CHECK(p.is_complete(1));
}

TEST_CASE("programs over different alphabets do not mix") {
    CHECK_THROWS_AS(parse_program("p.").united_with(parse_program("q.")), AlphabetError);
    const auto wide = parse_program("p.").over(Alphabet{"p", "q"});
    CHECK(wide.alphabet() == Alphabet{"p", "q"});
    CHECK(render_program(wide) == "p.");
}

} // TEST_SUITE
