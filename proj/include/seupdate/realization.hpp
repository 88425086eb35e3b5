#pragma once

#include "seupdate/program.hpp"
#include "seupdate/se_interpretation.hpp"

namespace seupdate {

/// M together with X* for every X in M.
SEModelSet star_closure(const SEModelSet& models);

/// A program whose SE-models are exactly star_closure(models).
///
/// Every total <J,J> outside the closure is removed by the constraint
/// `:- J, ~(A \ J).`; every non-total <I,J> outside it whose star survives is
/// removed by `(J \ I) ; ~J :- I, ~(A \ J).`. The result is checked with
/// se_models before it is returned; a mismatch throws std::logic_error.
Program realize(const SEModelSet& models, const Alphabet& alphabet);

/// Rule union, so SE(result) = SE(p) & SE(q).
Program conjoin(const Program& p, const Program& q);
/// A realization of SE(p) | SE(q).
Program disjoin(const Program& p, const Program& q);

} // namespace seupdate
