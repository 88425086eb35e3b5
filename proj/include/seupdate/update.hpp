#pragma once

#include "seupdate/formula.hpp"
#include "seupdate/orders.hpp"
#include "seupdate/program.hpp"
#include "seupdate/semantics.hpp"

#include <functional>
#include <memory>
#include <string>

namespace seupdate {

/// A rule update operator: any binary function on programs. Operators built
/// from an assignment also carry it.
class UpdateOperator {
public:
    using Apply = std::function<Program(const Program& original, const Program& update)>;

    UpdateOperator(std::string name, Apply apply, AssignmentPtr assignment = nullptr)
        : name_(std::move(name)), apply_(std::move(apply)), assignment_(std::move(assignment)) {}

    Program operator()(const Program& original, const Program& update) const { return apply_(original, update); }
    Program apply(const Program& original, const Program& update) const { return apply_(original, update); }

    const std::string& name() const noexcept { return name_; }
    const AssignmentPtr& assignment() const noexcept { return assignment_; }

private:
    std::string name_;
    Apply apply_;
    AssignmentPtr assignment_;
};

/// Union over X in SE(P) of min(SE(U), X). Throws WellDefinednessError naming
/// the first X whose contribution breaks star-closure.
SEModelSet se_update_models(const SEModelSet& original, const SEModelSet& update, const PreorderAssignment& o,
                            const Alphabet* alphabet = nullptr);
/// Realization of se_update_models(SE(P), SE(U), o).
Program se_update(const Program& original, const Program& update, const PreorderAssignment& o);

/// The operator characterised by `o`.
UpdateOperator characterised_by(AssignmentPtr o);
/// The operator characterised by the Winslett SE assignment.
UpdateOperator winslett_operator();
/// P (+) U := U. Syntax-independent but ignores the original program.
UpdateOperator projection_operator();
/// U plus the rules of P whose head does not clash with a fact of U. Depends
/// on syntax.
UpdateOperator rule_rejection_operator();

/// Winslett possible-models update: union over I in mod(phi) of the
/// <=_I-minimal models of mu.
Interpretations belief_update_models(const Formula& phi, const Formula& mu, const Alphabet& alphabet);
Interpretations belief_update_models(const Interpretations& phi_models, const Interpretations& mu_models,
                                     const ClassicalOrderAssignment& o);

/// P (+) U strongly entails Q, decided by enumeration.
bool query(const Program& p, const Program& u, const Program& q, const PreorderAssignment& o);
/// Same verdict for definite programs, using <I,J> |= U iff I, J both model U.
/// Throws PreconditionError on non-definite input.
bool definite_query(const Program& p, const Program& u, const Program& q, const PreorderAssignment& o);
/// SE-models of a definite program from its classical models.
SEModelSet definite_se_models(const Program& program);

/// Extensional assignment read off an operator by probing it with
/// realizations of one and two SE-interpretations, then closed reflexively
/// and transitively.
std::shared_ptr<const TableAssignment> generated_assignment(const UpdateOperator& op, const Alphabet& alphabet);

} // namespace seupdate
