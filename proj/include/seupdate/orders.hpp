#pragma once

#include "seupdate/alphabet.hpp"
#include "seupdate/se_interpretation.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seupdate {

/// Assigns to every SE-interpretation X a preorder leq(X, ., .) over all
/// SE-interpretations.
class PreorderAssignment {
public:
    virtual ~PreorderAssignment() = default;

    virtual bool leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const = 0;
    /// Fixed alphabet size for extensional assignments; empty when the rule
    /// applies to every alphabet.
    virtual std::optional<std::size_t> atom_count() const { return std::nullopt; }
    virtual std::string name() const = 0;

    /// Y <_X Z
    bool less(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const {
        return leq(x, y, z) && !leq(x, z, y);
    }
};

using AssignmentPtr = std::shared_ptr<const PreorderAssignment>;

/// The Winslett-style assignment on SE-interpretations. With X = <I,J>,
/// Y = <K1,L1>, Z = <K2,L2>: the there-differences from J are compared by
/// inclusion first; only on a tie are the here-differences from I compared,
/// ignoring the atoms in the shared there-difference.
class WinslettAssignment final : public PreorderAssignment {
public:
    bool leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const override;
    std::string name() const override { return "winslett"; }
};

bool winslett_se_leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) noexcept;

/// The strict part of the Winslett assignment computed from its closed-form
/// characterisation rather than from leq.
bool strict_via_lemma(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) noexcept;

/// Explicit per-X relation tables over a fixed alphabet size. Construction
/// validates reflexivity and transitivity.
class TableAssignment final : public PreorderAssignment {
public:
    using Relation = std::function<bool(const SEInterpretation&, const SEInterpretation&, const SEInterpretation&)>;

    /// Tabulates `relation` over all triples. Throws PreconditionError if some
    /// leq(X, ., .) is not a preorder.
    TableAssignment(std::size_t atom_count, const Relation& relation, std::string name = "table");
    /// Tabulates another assignment.
    TableAssignment(std::size_t atom_count, const PreorderAssignment& source);

    bool leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const override;
    bool leq_index(std::size_t x, std::size_t y, std::size_t z) const noexcept {
        const std::size_t bit = (x * size_ + y) * size_ + z;
        return (bits_[bit >> 6] >> (bit & 63)) & 1u;
    }
    std::optional<std::size_t> atom_count() const override { return atom_count_; }
    std::string name() const override { return name_; }

    /// Number of SE-interpretations, i.e. rows per table.
    std::size_t points() const noexcept { return size_; }

private:
    void validate() const;

    std::size_t atom_count_;
    std::size_t size_;
    std::string name_;
    std::vector<std::uint64_t> bits_;
};

/// Throws AlphabetError if `o` is tied to an alphabet size other than n.
void require_atom_count(const PreorderAssignment& o, std::size_t atom_count);

/// Classical counterpart: a preorder over interpretations for every interpretation.
class ClassicalOrderAssignment {
public:
    virtual ~ClassicalOrderAssignment() = default;
    virtual bool leq(Interpretation i, Interpretation j, Interpretation k) const = 0;
    bool less(Interpretation i, Interpretation j, Interpretation k) const { return leq(i, j, k) && !leq(i, k, j); }
};

/// J <=_I K iff (J ^ I) is a subset of (K ^ I).
class ClassicalWinslett final : public ClassicalOrderAssignment {
public:
    bool leq(Interpretation i, Interpretation j, Interpretation k) const override;
};

bool winslett_classical_leq(Interpretation i, Interpretation j, Interpretation k) noexcept;

/// { Y in m | no Z in m with Z <_X Y }
SEModelSet minima(const SEModelSet& m, const SEInterpretation& x, const PreorderAssignment& o);
std::vector<Interpretation> minima(const std::vector<Interpretation>& m, Interpretation i, const ClassicalOrderAssignment& o);

// ---------------------------------------------------------------------------
// Property checks

/// Exhaustive enumeration of all well-defined sets; only n <= 2 is feasible.
struct Exhaustive {
    std::size_t max_alphabet = 2;
};

/// Random well-defined sets drawn from a seeded generator.
struct Sampled {
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
};

using CheckMode = std::variant<Exhaustive, Sampled>;

inline constexpr std::size_t kMaxExhaustiveAtoms = 2;

enum class Verdict { holds, fails, no_counterexample, skipped };

std::string to_string(Verdict v);

struct PropertyCheck {
    Verdict verdict = Verdict::holds;
    std::size_t instances = 0;
    std::string witness;

    bool holds() const noexcept { return verdict == Verdict::holds; }
    bool failed() const noexcept { return verdict == Verdict::fails; }
};

/// Each leq(X, ., .) is reflexive and transitive.
PropertyCheck check_preorder(const PreorderAssignment& o, std::size_t atom_count);
/// X <_X Y for every Y != X.
PropertyCheck check_faithful(const PreorderAssignment& o, std::size_t atom_count);
PropertyCheck check_semi_faithful(const PreorderAssignment& o, std::size_t atom_count);
/// Each leq(X, ., .) is antisymmetric, i.e. a partial order.
PropertyCheck check_partial_order(const PreorderAssignment& o, std::size_t atom_count);

/// Quantifies over well-defined sets. Exhaustive mode throws
/// UnsupportedSizeError when n exceeds the requested (or supported) bound;
/// sampled mode reports no_counterexample instead of holds.
PropertyCheck check_organised(const PreorderAssignment& o, std::size_t atom_count, const CheckMode& mode = Exhaustive{});
/// For every well-defined M and X, min(M, X) | min(M, X*) is well-defined.
PropertyCheck check_well_defined_assignment(const PreorderAssignment& o, std::size_t atom_count,
                                            const CheckMode& mode = Exhaustive{});

bool is_faithful(const PreorderAssignment& o, std::size_t atom_count);
bool is_semi_faithful(const PreorderAssignment& o, std::size_t atom_count);
bool is_organised(const PreorderAssignment& o, std::size_t atom_count, std::size_t max_alphabet = kMaxExhaustiveAtoms);
bool is_well_defined_assignment(const PreorderAssignment& o, std::size_t atom_count,
                                std::size_t max_alphabet = kMaxExhaustiveAtoms);

bool is_faithful(const ClassicalOrderAssignment& o, std::size_t atom_count);

/// The faithful partial order Y <=' Z iff Y = X or Y = Z or Y <_X Z.
/// Throws PreconditionError unless `o` is semi-faithful.
std::shared_ptr<const TableAssignment> faithfulize(const PreorderAssignment& o, std::size_t atom_count);

// ---------------------------------------------------------------------------
// Enumeration of well-defined sets

/// All well-defined sets over n atoms in a fixed order (n <= 2).
std::vector<SEModelSet> all_well_defined_sets(std::size_t atom_count);

} // namespace seupdate
