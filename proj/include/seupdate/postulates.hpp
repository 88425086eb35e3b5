#pragma once

#include "seupdate/orders.hpp"
#include "seupdate/semantics.hpp"
#include "seupdate/update.hpp"

#include <map>
#include <string>
#include <vector>

namespace seupdate {

struct PostulateResult {
    std::string id;
    Verdict verdict = Verdict::holds;
    std::size_t instances = 0;
    /// Program texts of a falsifying instance, keyed by role ("P", "U", ...).
    std::map<std::string, std::string> witness;
    std::string reason;
};

struct PostulateReport {
    std::string operator_name;
    std::size_t atom_count = 0;
    std::string mode;
    std::vector<PostulateResult> results;

    const PostulateResult* find(const std::string& id) const;
    /// No result is `fails`.
    bool all_hold() const;
};

/// Ids in report order.
const std::vector<std::string>& rule_postulate_ids();

/// Checks P1-P8, P4.1, P4.2 and the Initialisation, Idempotence, Tautology,
/// Absorption and Augmentation principles. Programs range over one
/// realization per well-defined SE-set (all of them in exhaustive mode,
/// random ones in sampled mode); the syntax-independence postulates are also
/// checked on syntactic variants of those representatives. Failing instances
/// are shrunk before being reported.
PostulateReport check_postulates(const UpdateOperator& op, std::size_t atom_count, const CheckMode& mode = Exhaustive{},
                                 std::size_t threads = 0);

/// Re-evaluates one postulate on the witness programs of a failed result.
/// Returns true when the instance still violates the postulate.
bool refalsifies(const UpdateOperator& op, const PostulateResult& result, const Alphabet& alphabet);

/// Classical update operator acting on model sets.
using BeliefUpdate = std::function<Interpretations(const Interpretations& phi, const Interpretations& mu)>;

/// B1-B8 for a classical operator, quantifying over all model sets (formulas up
/// to equivalence) over n <= 3 atoms. B4 is structural for operators on model
/// sets and is reported as skipped.
PostulateReport check_belief_postulates(const BeliefUpdate& op, std::size_t atom_count, const std::string& name);

} // namespace seupdate
