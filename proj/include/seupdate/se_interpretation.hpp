#pragma once

#include "seupdate/alphabet.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace seupdate {

/// Semantic operations enumerate 3^n SE-interpretations; beyond this they refuse.
inline constexpr std::size_t kMaxSemanticAtoms = 16;

/// Throws AlphabetError when `atom_count` exceeds kMaxSemanticAtoms.
void require_enumerable(std::size_t atom_count);

/// A pair <I,J> with I a subset of J: atoms in I are true, atoms in J \ I are
/// undefined, the rest are false.
class SEInterpretation {
public:
    /// Throws PreconditionError unless here is a subset of there.
    SEInterpretation(Interpretation here, Interpretation there);
    static SEInterpretation total(Interpretation j) noexcept { return SEInterpretation(j, j, Unchecked{}); }

    Interpretation here() const noexcept { return here_; }
    Interpretation there() const noexcept { return there_; }
    bool is_total() const noexcept { return here_ == there_; }
    /// <I,J> -> <J,J>
    SEInterpretation star() const noexcept { return total(there_); }

    /// Canonical order: by J as an integer, then by I.
    friend auto operator<=>(const SEInterpretation& a, const SEInterpretation& b) noexcept {
        if (auto c = a.there_ <=> b.there_; c != 0) return c;
        return a.here_ <=> b.here_;
    }
    friend bool operator==(const SEInterpretation&, const SEInterpretation&) noexcept = default;

    std::string to_string(const Alphabet& alphabet) const;

private:
    struct Unchecked {};
    SEInterpretation(Interpretation here, Interpretation there, Unchecked) noexcept
        : here_(here), there_(there) {}
    friend SEInterpretation se_from_index(std::size_t, std::size_t);

    Interpretation here_;
    Interpretation there_;
};

inline SEInterpretation star(const SEInterpretation& x) noexcept { return x.star(); }

/// Number of SE-interpretations over n atoms, i.e. 3^n.
std::size_t se_universe_size(std::size_t atom_count);
/// Position of x in the canonical order over n atoms.
std::size_t se_index(const SEInterpretation& x, std::size_t atom_count);
SEInterpretation se_from_index(std::size_t index, std::size_t atom_count);

enum class TruthValue { t, u, f };

char to_char(TruthValue v) noexcept;
TruthValue truth_value(const SEInterpretation& x, std::size_t atom) noexcept;
/// X[p -> v]
SEInterpretation substitute(const SEInterpretation& x, std::size_t atom, TruthValue v) noexcept;

/// A set of SE-interpretations over a fixed number of atoms, stored as a bit
/// set over canonical positions. Iteration visits members in canonical order.
class SEModelSet {
public:
    SEModelSet() = default;
    explicit SEModelSet(std::size_t atom_count);
    SEModelSet(std::size_t atom_count, std::initializer_list<SEInterpretation> members);
    /// Every SE-interpretation over n atoms.
    static SEModelSet universe(std::size_t atom_count);

    std::size_t atom_count() const noexcept { return atom_count_; }
    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(const SEInterpretation& x) const;
    bool contains_index(std::size_t index) const noexcept { return (words_[index >> 6] >> (index & 63)) & 1u; }
    void insert(const SEInterpretation& x);
    void insert_index(std::size_t index) noexcept { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
    void erase(const SEInterpretation& x);
    void erase_index(std::size_t index) noexcept { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

    SEModelSet& operator|=(const SEModelSet& other);
    SEModelSet& operator&=(const SEModelSet& other);
    SEModelSet& operator-=(const SEModelSet& other);
    friend SEModelSet operator|(SEModelSet a, const SEModelSet& b) { return a |= b; }
    friend SEModelSet operator&(SEModelSet a, const SEModelSet& b) { return a &= b; }
    friend SEModelSet operator-(SEModelSet a, const SEModelSet& b) { return a -= b; }
    bool subset_of(const SEModelSet& other) const;

    friend bool operator==(const SEModelSet&, const SEModelSet&) = default;
    /// Arbitrary but fixed total order, for use as a map key.
    friend bool operator<(const SEModelSet& a, const SEModelSet& b) {
        return a.atom_count_ != b.atom_count_ ? a.atom_count_ < b.atom_count_ : a.words_ < b.words_;
    }
    std::size_t hash() const noexcept;

    /// Closed under X -> X*.
    bool is_well_defined() const;
    std::vector<SEInterpretation> members() const;
    std::vector<Interpretation> total_members() const;
    std::string to_string(const Alphabet& alphabet) const;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = SEInterpretation;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = SEInterpretation;

        iterator() = default;
        SEInterpretation operator*() const { return se_from_index(index_, set_->atom_count_); }
        iterator& operator++() { index_ = set_->next_index(index_ + 1); return *this; }
        iterator operator++(int) { auto old = *this; ++*this; return old; }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.index_ == b.index_; }

    private:
        friend class SEModelSet;
        iterator(const SEModelSet* set, std::size_t index) : set_(set), index_(index) {}
        const SEModelSet* set_ = nullptr;
        std::size_t index_ = 0;
    };

    iterator begin() const { return iterator(this, next_index(0)); }
    iterator end() const { return iterator(this, capacity_); }

private:
    std::size_t next_index(std::size_t from) const noexcept;
    void require_compatible(const SEModelSet& other) const;

    std::size_t atom_count_ = 0;
    std::size_t capacity_ = 1;
    std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

struct SEModelSetHash {
    std::size_t operator()(const SEModelSet& s) const noexcept { return s.hash(); }
};

} // namespace seupdate
