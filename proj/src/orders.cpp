#include "seupdate/orders.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/random.hpp"

#include <unordered_map>

namespace seupdate {

bool winslett_se_leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) noexcept {
    const AtomSet there_y = y.there() ^ x.there();
    const AtomSet there_z = z.there() ^ x.there();
    if (!there_y.subset_of(there_z))
        return false;
    if (there_y != there_z)
        return true;
    const AtomSet& delta = there_y;
    return ((y.here() ^ x.here()) - delta).subset_of((z.here() ^ x.here()) - delta);
}

bool strict_via_lemma(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) noexcept {
    const AtomSet there_y = y.there() ^ x.there();
    const AtomSet there_z = z.there() ^ x.there();
    if (there_y != there_z)
        return there_y.subset_of(there_z);
    const AtomSet& delta = there_y;
    const AtomSet here_y = (y.here() ^ x.here()) - delta;
    const AtomSet here_z = (z.here() ^ x.here()) - delta;
    return here_y.subset_of(here_z) && here_y != here_z;
}

bool WinslettAssignment::leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const {
    return winslett_se_leq(x, y, z);
}

// ---------------------------------------------------------------------------
// TableAssignment

namespace {

constexpr std::size_t kMaxTableAtoms = 5;

std::size_t table_points(std::size_t atom_count) {
    if (atom_count > kMaxTableAtoms)
        throw AlphabetError("extensional assignments support at most " + std::to_string(kMaxTableAtoms) + " atoms");
    return se_universe_size(atom_count);
}

} // namespace

TableAssignment::TableAssignment(std::size_t atom_count, const Relation& relation, std::string name)
    : atom_count_(atom_count), size_(table_points(atom_count)), name_(std::move(name)),
      bits_((size_ * size_ * size_ + 63) / 64, 0) {
    for (std::size_t x = 0; x < size_; ++x) {
        const auto sx = se_from_index(x, atom_count_);
        for (std::size_t y = 0; y < size_; ++y) {
            const auto sy = se_from_index(y, atom_count_);
            for (std::size_t z = 0; z < size_; ++z) {
                if (relation(sx, sy, se_from_index(z, atom_count_))) {
                    const std::size_t bit = (x * size_ + y) * size_ + z;
                    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
                }
            }
        }
    }
    validate();
}

TableAssignment::TableAssignment(std::size_t atom_count, const PreorderAssignment& source)
    : TableAssignment(
          atom_count,
          [&source](const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) {
              return source.leq(x, y, z);
          },
          source.name()) {}

bool TableAssignment::leq(const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) const {
    const AtomSet full = AtomSet::first(atom_count_);
    if (!x.there().subset_of(full) || !y.there().subset_of(full) || !z.there().subset_of(full))
        throw AlphabetError("SE-interpretation outside the assignment's alphabet");
    return leq_index(se_index(x, atom_count_), se_index(y, atom_count_), se_index(z, atom_count_));
}

void TableAssignment::validate() const {
    for (std::size_t x = 0; x < size_; ++x) {
        for (std::size_t y = 0; y < size_; ++y) {
            if (!leq_index(x, y, y))
                throw PreconditionError("assignment is not reflexive at X = " + std::to_string(x));
            for (std::size_t z = 0; z < size_; ++z) {
                if (!leq_index(x, y, z))
                    continue;
                for (std::size_t w = 0; w < size_; ++w)
                    if (leq_index(x, z, w) && !leq_index(x, y, w))
                        throw PreconditionError("assignment is not transitive at X = " + std::to_string(x));
            }
        }
    }
}

void require_atom_count(const PreorderAssignment& o, std::size_t atom_count) {
    if (auto n = o.atom_count(); n && *n != atom_count)
        throw AlphabetError("assignment '" + o.name() + "' is defined over " + std::to_string(*n) +
                            " atoms, not " + std::to_string(atom_count));
}

// ---------------------------------------------------------------------------
// Classical

bool winslett_classical_leq(Interpretation i, Interpretation j, Interpretation k) noexcept {
    return (j ^ i).subset_of(k ^ i);
}

bool ClassicalWinslett::leq(Interpretation i, Interpretation j, Interpretation k) const {
    return winslett_classical_leq(i, j, k);
}

// ---------------------------------------------------------------------------
// Minima

SEModelSet minima(const SEModelSet& m, const SEInterpretation& x, const PreorderAssignment& o) {
    SEModelSet out(m.atom_count());
    const auto members = m.members();
    for (const auto& y : members) {
        bool minimal = true;
        for (const auto& z : members) {
            if (o.less(x, z, y)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.insert(y);
    }
    return out;
}

std::vector<Interpretation> minima(const std::vector<Interpretation>& m, Interpretation i,
                                   const ClassicalOrderAssignment& o) {
    std::vector<Interpretation> out;
    for (auto j : m) {
        bool minimal = true;
        for (auto k : m) {
            if (o.less(i, k, j)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Property checks

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::no_counterexample: return "no-counterexample";
    case Verdict::skipped: return "skipped";
    }
    return "unknown";
}

namespace {

std::vector<SEInterpretation> universe_members(std::size_t atom_count) {
    return SEModelSet::universe(atom_count).members();
}

PropertyCheck failure(std::size_t instances, std::string witness) {
    return PropertyCheck{Verdict::fails, instances, std::move(witness)};
}

std::string fmt(const SEInterpretation& x, const Alphabet& a) { return x.to_string(a); }

} // namespace

PropertyCheck check_preorder(const PreorderAssignment& o, std::size_t atom_count) {
    require_atom_count(o, atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    const auto all = universe_members(atom_count);
    std::size_t instances = 0;
    for (const auto& x : all) {
        for (const auto& y : all) {
            ++instances;
            if (!o.leq(x, y, y))
                return failure(instances, "not reflexive: X = " + fmt(x, a) + ", Y = " + fmt(y, a));
            for (const auto& z : all) {
                if (!o.leq(x, y, z))
                    continue;
                for (const auto& w : all)
                    if (o.leq(x, z, w) && !o.leq(x, y, w))
                        return failure(instances, "not transitive: X = " + fmt(x, a) + ", " + fmt(y, a) +
                                                      " <= " + fmt(z, a) + " <= " + fmt(w, a));
            }
        }
    }
    return PropertyCheck{Verdict::holds, instances, {}};
}

PropertyCheck check_faithful(const PreorderAssignment& o, std::size_t atom_count) {
    require_atom_count(o, atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    const auto all = universe_members(atom_count);
    std::size_t instances = 0;
    for (const auto& x : all) {
        for (const auto& y : all) {
            if (y == x)
                continue;
            ++instances;
            if (!o.less(x, x, y))
                return failure(instances, "X = " + fmt(x, a) + " is not strictly below Y = " + fmt(y, a));
        }
    }
    return PropertyCheck{Verdict::holds, instances, {}};
}

PropertyCheck check_semi_faithful(const PreorderAssignment& o, std::size_t atom_count) {
    require_atom_count(o, atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    const auto all = universe_members(atom_count);
    std::size_t instances = 0;
    for (const auto& x : all) {
        const auto xs = x.star();
        for (const auto& y : all) {
            if (y == x || y == xs)
                continue;
            ++instances;
            if (!o.less(x, x, y) && !o.less(x, xs, y))
                return failure(instances, "neither X = " + fmt(x, a) + " nor X* is strictly below Y = " + fmt(y, a));
        }
        ++instances;
        if (o.leq(x, xs, x) && !o.leq(x, x, xs))
            return failure(instances, "X* <= X but not X <= X* for X = " + fmt(x, a));
    }
    return PropertyCheck{Verdict::holds, instances, {}};
}

PropertyCheck check_partial_order(const PreorderAssignment& o, std::size_t atom_count) {
    require_atom_count(o, atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    const auto all = universe_members(atom_count);
    std::size_t instances = 0;
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                if (y == z)
                    continue;
                ++instances;
                if (o.leq(x, y, z) && o.leq(x, z, y))
                    return failure(instances, "not antisymmetric at X = " + fmt(x, a) + ": " + fmt(y, a) +
                                                  " and " + fmt(z, a) + " are tied");
            }
    return PropertyCheck{Verdict::holds, instances, {}};
}

namespace {

SEModelSet paired_minima(const SEModelSet& m, const SEInterpretation& x, const PreorderAssignment& o) {
    return minima(m, x, o) | minima(m, x.star(), o);
}

void require_exhaustive_size(std::size_t atom_count, const Exhaustive& mode) {
    if (mode.max_alphabet > kMaxExhaustiveAtoms)
        throw UnsupportedSizeError("exhaustive checks support at most " + std::to_string(kMaxExhaustiveAtoms) +
                                   " atoms");
    if (atom_count > mode.max_alphabet)
        throw UnsupportedSizeError("exhaustive check over " + std::to_string(atom_count) +
                                   " atoms exceeds the limit of " + std::to_string(mode.max_alphabet));
}

std::string organised_witness(const SEInterpretation& x, const SEInterpretation& y, const SEModelSet& m,
                              const SEModelSet& n, const Alphabet& a) {
    return "X = " + fmt(x, a) + ", Y = " + fmt(y, a) + ", M = " + m.to_string(a) + ", N = " + n.to_string(a);
}

} // namespace

PropertyCheck check_organised(const PreorderAssignment& o, std::size_t atom_count, const CheckMode& mode) {
    require_atom_count(o, atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    std::size_t instances = 0;

    auto violation = [&](const SEModelSet& mm, const SEModelSet& nn,
                         const SEModelSet& joint) -> std::optional<SEInterpretation> {
        for (const auto& y : mm & nn)
            if (!joint.contains(y))
                return y;
        return std::nullopt;
    };

    if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
        require_exhaustive_size(atom_count, *ex);
        const auto sets = all_well_defined_sets(atom_count);
        std::unordered_map<SEModelSet, std::size_t, SEModelSetHash> position;
        for (std::size_t k = 0; k < sets.size(); ++k)
            position.emplace(sets[k], k);
        std::vector<std::size_t> union_index(sets.size() * sets.size());
        for (std::size_t k = 0; k < sets.size(); ++k)
            for (std::size_t l = k; l < sets.size(); ++l)
                union_index[k * sets.size() + l] = position.at(sets[k] | sets[l]);

        for (const auto& x : SEModelSet::universe(atom_count)) {
            std::vector<SEModelSet> mins;
            mins.reserve(sets.size());
            for (const auto& s : sets)
                mins.push_back(paired_minima(s, x, o));
            for (std::size_t k = 0; k < sets.size(); ++k) {
                for (std::size_t l = k; l < sets.size(); ++l) {
                    ++instances;
                    const auto& joint = mins[union_index[k * sets.size() + l]];
                    if (auto y = violation(mins[k], mins[l], joint))
                        return failure(instances, organised_witness(x, *y, sets[k], sets[l], a));
                }
            }
        }
        return PropertyCheck{Verdict::holds, instances, {}};
    }

    const auto& sm = std::get<Sampled>(mode);
    require_enumerable(atom_count);
    Rng rng(sm.seed);
    const std::size_t points = se_universe_size(atom_count);
    for (std::size_t s = 0; s < sm.samples; ++s) {
        const auto x = se_from_index(uniform_below(rng, points), atom_count);
        const auto m = random_well_defined_set(atom_count, rng);
        const auto n = random_well_defined_set(atom_count, rng);
        ++instances;
        if (auto y = violation(paired_minima(m, x, o), paired_minima(n, x, o), paired_minima(m | n, x, o)))
            return failure(instances, organised_witness(x, *y, m, n, a));
    }
    return PropertyCheck{Verdict::no_counterexample, instances, {}};
}

PropertyCheck check_well_defined_assignment(const PreorderAssignment& o, std::size_t atom_count,
                                            const CheckMode& mode) {
    require_atom_count(o, atom_count);
    const Alphabet a = standard_alphabet(atom_count);
    std::size_t instances = 0;
    auto check = [&](const SEInterpretation& x, const SEModelSet& m) -> std::optional<std::string> {
        ++instances;
        const auto mins = paired_minima(m, x, o);
        if (mins.is_well_defined())
            return std::nullopt;
        return "X = " + fmt(x, a) + ", M = " + m.to_string(a) + ": minima " + mins.to_string(a) +
               " are not closed under star";
    };

    if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
        require_exhaustive_size(atom_count, *ex);
        const auto sets = all_well_defined_sets(atom_count);
        for (const auto& x : SEModelSet::universe(atom_count))
            for (const auto& m : sets)
                if (auto w = check(x, m))
                    return failure(instances, *w);
        return PropertyCheck{Verdict::holds, instances, {}};
    }

    const auto& sm = std::get<Sampled>(mode);
    require_enumerable(atom_count);
    Rng rng(sm.seed);
    const std::size_t points = se_universe_size(atom_count);
    for (std::size_t s = 0; s < sm.samples; ++s) {
        const auto x = se_from_index(uniform_below(rng, points), atom_count);
        if (auto w = check(x, random_well_defined_set(atom_count, rng)))
            return failure(instances, *w);
    }
    return PropertyCheck{Verdict::no_counterexample, instances, {}};
}

bool is_faithful(const PreorderAssignment& o, std::size_t atom_count) { return check_faithful(o, atom_count).holds(); }

bool is_semi_faithful(const PreorderAssignment& o, std::size_t atom_count) {
    return check_semi_faithful(o, atom_count).holds();
}

bool is_organised(const PreorderAssignment& o, std::size_t atom_count, std::size_t max_alphabet) {
    return check_organised(o, atom_count, Exhaustive{max_alphabet}).holds();
}

bool is_well_defined_assignment(const PreorderAssignment& o, std::size_t atom_count, std::size_t max_alphabet) {
    return check_well_defined_assignment(o, atom_count, Exhaustive{max_alphabet}).holds();
}

bool is_faithful(const ClassicalOrderAssignment& o, std::size_t atom_count) {
    if (atom_count > 16)
        throw AlphabetError("alphabet too large for enumeration");
    const AtomSet::Bits count = AtomSet::Bits{1} << atom_count;
    for (AtomSet::Bits i = 0; i < count; ++i)
        for (AtomSet::Bits j = 0; j < count; ++j)
            if (i != j && !o.less(AtomSet{i}, AtomSet{i}, AtomSet{j}))
                return false;
    return true;
}

std::shared_ptr<const TableAssignment> faithfulize(const PreorderAssignment& o, std::size_t atom_count) {
    if (auto check = check_semi_faithful(o, atom_count); !check.holds())
        throw PreconditionError("faithfulize requires a semi-faithful assignment: " + check.witness);
    return std::make_shared<const TableAssignment>(
        atom_count,
        [&o](const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) {
            return y == x || y == z || o.less(x, y, z);
        },
        o.name() + "'");
}

// ---------------------------------------------------------------------------
// Well-defined sets

std::vector<SEModelSet> all_well_defined_sets(std::size_t atom_count) {
    if (atom_count > kMaxExhaustiveAtoms)
        throw UnsupportedSizeError("enumerating all well-defined sets supports at most " +
                                   std::to_string(kMaxExhaustiveAtoms) + " atoms");
    // Per there-component J, the options are: nothing, or <J,J> plus any
    // subset of the non-total <I,J>.
    std::vector<std::vector<SEModelSet>> options;
    for (AtomSet::Bits jb = 0; jb < (AtomSet::Bits{1} << atom_count); ++jb) {
        const AtomSet j{jb};
        std::vector<SEInterpretation> below;
        if (jb != 0)
            for (AtomSet::Bits ib = 0; ib < jb + 1; ++ib)
                if ((ib & ~jb) == 0 && ib != jb)
                    below.emplace_back(AtomSet{ib}, j);
        std::vector<SEModelSet> opts{SEModelSet(atom_count)};
        for (std::size_t mask = 0; mask < (std::size_t{1} << below.size()); ++mask) {
            SEModelSet s(atom_count);
            s.insert(SEInterpretation::total(j));
            for (std::size_t b = 0; b < below.size(); ++b)
                if ((mask >> b) & 1u)
                    s.insert(below[b]);
            opts.push_back(std::move(s));
        }
        options.push_back(std::move(opts));
    }
    std::vector<SEModelSet> out{SEModelSet(atom_count)};
    for (const auto& opts : options) {
        std::vector<SEModelSet> next;
        next.reserve(out.size() * opts.size());
        for (const auto& partial : out)
            for (const auto& o : opts)
                next.push_back(partial | o);
        out = std::move(next);
    }
    return out;
}

} // namespace seupdate
