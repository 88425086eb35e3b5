#include "seupdate/alphabet.hpp"

#include "seupdate/errors.hpp"

#include <algorithm>

namespace seupdate {

std::vector<std::size_t> AtomSet::atoms() const {
    std::vector<std::size_t> out;
    for (Bits b = bits_; b != 0; b &= b - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : atoms_(std::move(names)) {
    for (const auto& n : atoms_)
        if (!is_valid_atom_name(n))
            throw AlphabetError("invalid atom name '" + n + "'");
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    if (atoms_.size() > kMaxAtoms)
        throw AlphabetError("alphabet has " + std::to_string(atoms_.size()) + " atoms; at most " +
                            std::to_string(kMaxAtoms) + " are supported");
}

Alphabet::Alphabet(std::initializer_list<std::string_view> names)
    : Alphabet(std::vector<std::string>(names.begin(), names.end())) {}

bool Alphabet::is_valid_atom_name(std::string_view name) noexcept {
    if (name.empty() || name.front() < 'a' || name.front() > 'z')
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const noexcept {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
    if (it == atoms_.end() || *it != name)
        return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
}

std::size_t Alphabet::require(std::string_view name) const {
    if (auto i = index_of(name))
        return *i;
    throw AlphabetError("unknown atom '" + std::string(name) + "'");
}

AtomSet Alphabet::set_of(std::initializer_list<std::string_view> names) const {
    AtomSet s;
    for (auto n : names)
        s = s.with(require(n));
    return s;
}

std::vector<std::string> Alphabet::names_of(AtomSet set) const {
    std::vector<std::string> out;
    for (auto i : set.atoms())
        out.push_back(name(i));
    return out;
}

std::string Alphabet::format(AtomSet set) const {
    std::string out = "{";
    bool first = true;
    for (auto i : set.atoms()) {
        if (!first)
            out += ',';
        out += name(i);
        first = false;
    }
    return out + "}";
}

Alphabet Alphabet::merged(const Alphabet& other) const {
    std::vector<std::string> all = atoms_;
    all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
    return Alphabet(std::move(all));
}

AtomSet Alphabet::translate(AtomSet set, const Alphabet& wider) const {
    AtomSet out;
    for (auto i : set.atoms())
        out = out.with(wider.require(name(i)));
    return out;
}

} // namespace seupdate
