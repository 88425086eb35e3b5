#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seupdate {

inline constexpr std::size_t kMaxAtoms = 32;

/// A set of atoms, stored as a bit mask over the positions of an Alphabet.
class AtomSet {
public:
    using Bits = std::uint32_t;

    constexpr AtomSet() noexcept = default;
    constexpr explicit AtomSet(Bits bits) noexcept : bits_(bits) {}

    static constexpr AtomSet singleton(std::size_t atom) noexcept { return AtomSet{Bits{1} << atom}; }
    static constexpr AtomSet first(std::size_t count) noexcept {
        return AtomSet{count >= 32 ? ~Bits{0} : ((Bits{1} << count) - 1)};
    }

    constexpr Bits bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t atom) const noexcept { return (bits_ >> atom) & 1u; }
    constexpr bool subset_of(AtomSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(AtomSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr AtomSet with(std::size_t atom) const noexcept { return AtomSet{bits_ | (Bits{1} << atom)}; }
    constexpr AtomSet without(std::size_t atom) const noexcept { return AtomSet{bits_ & ~(Bits{1} << atom)}; }

    friend constexpr AtomSet operator|(AtomSet a, AtomSet b) noexcept { return AtomSet{a.bits_ | b.bits_}; }
    friend constexpr AtomSet operator&(AtomSet a, AtomSet b) noexcept { return AtomSet{a.bits_ & b.bits_}; }
    /// Set difference.
    friend constexpr AtomSet operator-(AtomSet a, AtomSet b) noexcept { return AtomSet{a.bits_ & ~b.bits_}; }
    /// Symmetric difference.
    friend constexpr AtomSet operator^(AtomSet a, AtomSet b) noexcept { return AtomSet{a.bits_ ^ b.bits_}; }
    AtomSet& operator|=(AtomSet o) noexcept { bits_ |= o.bits_; return *this; }

    friend constexpr bool operator==(AtomSet, AtomSet) noexcept = default;
    friend constexpr auto operator<=>(AtomSet a, AtomSet b) noexcept { return a.bits_ <=> b.bits_; }

    /// Atom positions in increasing order.
    std::vector<std::size_t> atoms() const;

private:
    Bits bits_ = 0;
};

/// An interpretation is the set of atoms it makes true.
using Interpretation = AtomSet;

/// Ordered finite set of atom names. Atoms are kept sorted lexicographically, so
/// two alphabets with the same names are identical position by position.
class Alphabet {
public:
    Alphabet() = default;
    /// Names are sorted and deduplicated. Throws AlphabetError on invalid names.
    explicit Alphabet(std::vector<std::string> names);
    Alphabet(std::initializer_list<std::string_view> names);

    static bool is_valid_atom_name(std::string_view name) noexcept;

    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    const std::string& name(std::size_t atom) const { return atoms_.at(atom); }
    const std::vector<std::string>& names() const noexcept { return atoms_; }
    std::optional<std::size_t> index_of(std::string_view name) const noexcept;
    /// Throws AlphabetError for unknown names.
    std::size_t require(std::string_view name) const;

    AtomSet full() const noexcept { return AtomSet::first(atoms_.size()); }
    AtomSet set_of(std::initializer_list<std::string_view> names) const;
    std::vector<std::string> names_of(AtomSet set) const;
    /// "{p,q}" form.
    std::string format(AtomSet set) const;

    /// Alphabet whose atoms are the union of both.
    Alphabet merged(const Alphabet& other) const;
    /// Positions of this alphabet's atoms in `wider`; throws if some atom is missing.
    AtomSet translate(AtomSet set, const Alphabet& wider) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> atoms_;
};

} // namespace seupdate
