#pragma once

#include "seupdate/program.hpp"
#include "seupdate/se_interpretation.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace seupdate {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Independent of the standard library's
/// distribution implementations, so seeds reproduce across toolchains.
std::size_t uniform_below(Rng& rng, std::size_t bound);
bool coin(Rng& rng, double p_true = 0.5);

/// Each total <J,J> is kept with probability 1/2; each non-total <I,J> whose
/// star is kept joins with probability `density`.
SEModelSet random_well_defined_set(std::size_t atom_count, Rng& rng, double density = 0.5);

/// Random rule; every atom lands in each part independently with probability `p`.
Rule random_rule(std::size_t atom_count, Rng& rng, double p = 0.25);
Program random_program(const Alphabet& alphabet, Rng& rng, std::size_t max_rules = 4);
/// A consistent set of facts over a random subset of the alphabet.
Program random_facts(const Alphabet& alphabet, Rng& rng, bool positive_only = false);

/// A syntactically different program with the same SE-models: adds rules the
/// program strongly entails, drops rules whose removal keeps SE-models intact,
/// and adds tautologies. The equivalence is asserted before returning.
Program syntactic_variant(const Program& program, Rng& rng);

/// Alphabet {a00, a01, ...}; for n <= 4 the readable names p, q, r, s.
Alphabet standard_alphabet(std::size_t atom_count);

} // namespace seupdate
