#pragma once

#include "seupdate/formula.hpp"
#include "seupdate/program.hpp"
#include "seupdate/se_interpretation.hpp"

#include <vector>

namespace seupdate {

/// Sorted (as bit integers) list of interpretations.
using Interpretations = std::vector<Interpretation>;

bool satisfies(Interpretation j, const Program& program) noexcept;

/// All models over `alphabet`, by enumeration of the 2^n interpretations.
Interpretations classical_models(const Formula& formula, const Alphabet& alphabet);
Interpretations classical_models(const Program& program);

/// P^J: H+ :- B+. for every rule with H- inside J and B- disjoint from J.
Program reduct(const Program& program, Interpretation j);

/// { <I,J> : J |= P and I |= P^J }.
SEModelSet se_models(const Program& program);

/// Answer sets via subset-minimal models of the reduct.
Interpretations answer_sets_by_reduct(const Program& program);
/// Answer sets extracted from SE-models: <J,J> in SE(P) and no <I,J> with I < J.
Interpretations answer_sets_from_se(const SEModelSet& models);
/// Both routes, checked against each other. Disagreement throws std::logic_error.
Interpretations answer_sets(const Program& program);

bool is_well_defined(const SEModelSet& models);
/// SE(P) = {X, X*} for some X.
bool is_basic(const Program& program);
bool is_basic_set(const SEModelSet& models);

bool strongly_equivalent(const Program& p, const Program& q);
/// SE(p) is a subset of SE(q).
bool strongly_entails(const Program& p, const Program& q);

} // namespace seupdate
