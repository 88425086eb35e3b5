#pragma once

#include "seupdate/orders.hpp"
#include "seupdate/postulates.hpp"
#include "seupdate/program.hpp"
#include "seupdate/semantics.hpp"
#include "seupdate/update.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seupdate {

/// Some rule has `atom` in its positive head and a body satisfied by j.
bool is_supported(const Program& rules, std::size_t atom, Interpretation j);

struct SupportVerdict {
    bool holds = true;
    /// (answer set, unsupported atom)
    std::vector<std::pair<Interpretation, std::size_t>> failures;
};

/// Every atom of every answer set of op(P, U) is supported by P | U.
SupportVerdict respects_support_instance(const UpdateOperator& op, const Program& p, const Program& u);

struct FactUpdateVerdict {
    bool holds = true;
    Interpretation expected;
    Interpretations answer_sets;
};

/// Sets of facts with at most one polarity per atom. Such a set always has a
/// classical model.
bool is_consistent_facts(const Program& program);

/// op(P, U) has exactly one answer set: the atoms asserted by P or U and not
/// retracted by U. Throws PreconditionError unless P and U are consistent
/// sets of facts.
FactUpdateVerdict respects_fact_update_instance(const UpdateOperator& op, const Program& p, const Program& u);

struct ImpossibilityReport {
    enum class Outcome { support_fails, fact_update_fails, both_fail, p4_violated };

    bool originals_equivalent = false;
    bool p4_instance = false;
    SEModelSet p_update_models;
    SEModelSet q_update_models;
    FactUpdateVerdict fact_update;
    SupportVerdict support_p;
    SupportVerdict support_q;
    Outcome outcome = Outcome::p4_violated;

    std::string narrative;
};

std::string to_string(ImpossibilityReport::Outcome outcome);

/// Runs the P = {p. q.}, Q = {p :- q. q.}, U = {~q.} instance over {p, q}
/// against `op`. When op agrees on P and Q, support or fact update must fail;
/// std::logic_error otherwise.
ImpossibilityReport impossibility_demo(const UpdateOperator& op);

/// Support and fact update as properties of `op` over n atoms, reported as
/// results "support" and "fact-update". Support is tried first on the
/// impossibility programs (n >= 2), then on pairs drawn like the postulate
/// checker draws them; fact update on all pairs of consistent fact sets
/// (exhaustive) or random ones (sampled). Witnesses are the first failing
/// pair in that order.
PostulateReport check_support_and_fact_update(const UpdateOperator& op, std::size_t atom_count,
                                              const CheckMode& mode = Exhaustive{});

} // namespace seupdate
