#include "seupdate/se_interpretation.hpp"

#include "seupdate/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

namespace seupdate {

void require_enumerable(std::size_t atom_count) {
    if (atom_count > kMaxSemanticAtoms)
        throw AlphabetError("alphabet has " + std::to_string(atom_count) + " atoms; semantic operations support at most " +
                            std::to_string(kMaxSemanticAtoms));
}

SEInterpretation::SEInterpretation(Interpretation here, Interpretation there) : here_(here), there_(there) {
    if (!here.subset_of(there))
        throw PreconditionError("SE-interpretation requires here to be a subset of there");
}

std::string SEInterpretation::to_string(const Alphabet& alphabet) const {
    return "<" + alphabet.format(here_) + "," + alphabet.format(there_) + ">";
}

namespace {

// offsets[n][J] = number of SE-interpretations <I',J'> with J' < J, the final
// entry being 3^n.
const std::vector<std::size_t>& offsets(std::size_t n) {
    static const auto tables = [] {
        std::array<std::vector<std::size_t>, kMaxSemanticAtoms + 1> t;
        for (std::size_t k = 0; k <= kMaxSemanticAtoms; ++k) {
            const std::size_t count = std::size_t{1} << k;
            auto& v = t[k];
            v.resize(count + 1);
            v[0] = 0;
            for (std::size_t j = 0; j < count; ++j)
                v[j + 1] = v[j] + (std::size_t{1} << std::popcount(j));
        }
        return t;
    }();
    require_enumerable(n);
    return tables[n];
}

// Compresses the bits of `value` selected by `mask` into the low bits.
std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    std::uint32_t bit = 1;
    for (std::uint32_t m = mask; m != 0; m &= m - 1, bit <<= 1)
        if (value & m & (~m + 1))
            out |= bit;
    return out;
}

// Inverse of extract_bits.
std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    std::uint32_t bit = 1;
    for (std::uint32_t m = mask; m != 0; m &= m - 1, bit <<= 1)
        if (value & bit)
            out |= m & (~m + 1);
    return out;
}

} // namespace

std::size_t se_universe_size(std::size_t atom_count) { return offsets(atom_count).back(); }

std::size_t se_index(const SEInterpretation& x, std::size_t atom_count) {
    const auto& off = offsets(atom_count);
    const auto j = x.there().bits();
    return off[j] + extract_bits(x.here().bits(), j);
}

SEInterpretation se_from_index(std::size_t index, std::size_t atom_count) {
    const auto& off = offsets(atom_count);
    const auto it = std::upper_bound(off.begin(), off.end(), index);
    const auto j = static_cast<std::uint32_t>(it - off.begin() - 1);
    const auto i = deposit_bits(static_cast<std::uint32_t>(index - off[j]), j);
    return SEInterpretation(AtomSet{i}, AtomSet{j}, SEInterpretation::Unchecked{});
}

char to_char(TruthValue v) noexcept {
    switch (v) {
    case TruthValue::t: return 'T';
    case TruthValue::u: return 'U';
    case TruthValue::f: return 'F';
    }
    return '?';
}

TruthValue truth_value(const SEInterpretation& x, std::size_t atom) noexcept {
    if (x.here().contains(atom))
        return TruthValue::t;
    if (x.there().contains(atom))
        return TruthValue::u;
    return TruthValue::f;
}

SEInterpretation substitute(const SEInterpretation& x, std::size_t atom, TruthValue v) noexcept {
    switch (v) {
    case TruthValue::t: return SEInterpretation(x.here().with(atom), x.there().with(atom));
    case TruthValue::u: return SEInterpretation(x.here().without(atom), x.there().with(atom));
    case TruthValue::f: return SEInterpretation(x.here().without(atom), x.there().without(atom));
    }
    return x;
}

// ---------------------------------------------------------------------------
// SEModelSet

SEModelSet::SEModelSet(std::size_t atom_count)
    : atom_count_(atom_count), capacity_(se_universe_size(atom_count)), words_((capacity_ + 63) / 64, 0) {}

SEModelSet::SEModelSet(std::size_t atom_count, std::initializer_list<SEInterpretation> members)
    : SEModelSet(atom_count) {
    for (const auto& x : members)
        insert(x);
}

SEModelSet SEModelSet::universe(std::size_t atom_count) {
    SEModelSet s(atom_count);
    for (std::size_t i = 0; i < s.capacity_; ++i)
        s.insert_index(i);
    return s;
}

std::size_t SEModelSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool SEModelSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool SEModelSet::contains(const SEInterpretation& x) const {
    if (!x.there().subset_of(AtomSet::first(atom_count_)))
        return false;
    return contains_index(se_index(x, atom_count_));
}

void SEModelSet::insert(const SEInterpretation& x) {
    if (!x.there().subset_of(AtomSet::first(atom_count_)))
        throw AlphabetError("SE-interpretation outside the model set's alphabet");
    insert_index(se_index(x, atom_count_));
}

void SEModelSet::erase(const SEInterpretation& x) {
    if (x.there().subset_of(AtomSet::first(atom_count_)))
        erase_index(se_index(x, atom_count_));
}

void SEModelSet::require_compatible(const SEModelSet& other) const {
    if (atom_count_ != other.atom_count_)
        throw AlphabetError("SE-model sets over different alphabets");
}

SEModelSet& SEModelSet::operator|=(const SEModelSet& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

SEModelSet& SEModelSet::operator&=(const SEModelSet& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

SEModelSet& SEModelSet::operator-=(const SEModelSet& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool SEModelSet::subset_of(const SEModelSet& other) const {
    require_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

std::size_t SEModelSet::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(atom_count_);
    for (auto w : words_)
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool SEModelSet::is_well_defined() const {
    for (const auto& x : *this)
        if (!contains(x.star()))
            return false;
    return true;
}

std::vector<SEInterpretation> SEModelSet::members() const { return {begin(), end()}; }

std::vector<Interpretation> SEModelSet::total_members() const {
    std::vector<Interpretation> out;
    for (const auto& x : *this)
        if (x.is_total())
            out.push_back(x.there());
    return out;
}

std::string SEModelSet::to_string(const Alphabet& alphabet) const {
    std::string out = "{";
    bool first = true;
    for (const auto& x : *this) {
        if (!first)
            out += ", ";
        out += x.to_string(alphabet);
        first = false;
    }
    return out + "}";
}

std::size_t SEModelSet::next_index(std::size_t from) const noexcept {
    if (from >= capacity_)
        return capacity_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (word == 0) {
        if (++w == words_.size())
            return capacity_;
        word = words_[w];
    }
    return std::min(capacity_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
}

} // namespace seupdate
