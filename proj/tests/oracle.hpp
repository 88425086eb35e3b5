#pragma once

// Reference implementations for the tests. They work on named atom sets and
// follow the textbook definitions literally, sharing no code with the library
// beyond reading Rule fields and alphabet names.

#include "seupdate/alphabet.hpp"
#include "seupdate/program.hpp"
#include "seupdate/se_interpretation.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Atoms = std::set<std::string>;
using SE = std::pair<Atoms, Atoms>;  // (here, there)
using SESet = std::set<SE>;
using Worlds = std::set<Atoms>;

struct ORule {
    Atoms hp, hn, bp, bn;
};

inline Atoms names(seupdate::AtomSet s, const seupdate::Alphabet& a) {
    Atoms out;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (s.contains(k))
            out.insert(a.name(k));
    return out;
}

inline std::vector<ORule> rules_of(const seupdate::Program& p) {
    std::vector<ORule> out;
    for (const auto& r : p.rules())
        out.push_back({names(r.head_pos, p.alphabet()), names(r.head_neg, p.alphabet()),
                       names(r.body_pos, p.alphabet()), names(r.body_neg, p.alphabet())});
    return out;
}

inline bool includes(const Atoms& big, const Atoms& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline bool disjoint(const Atoms& a, const Atoms& b) {
    for (const auto& x : a)
        if (b.count(x))
            return false;
    return true;
}

inline Atoms minus(const Atoms& a, const Atoms& b) {
    Atoms out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline Atoms symdiff(const Atoms& a, const Atoms& b) {
    Atoms out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline Worlds subsets(const Atoms& universe) {
    std::vector<std::string> v(universe.begin(), universe.end());
    Worlds out;
    for (std::size_t m = 0; m < (std::size_t{1} << v.size()); ++m) {
        Atoms s;
        for (std::size_t k = 0; k < v.size(); ++k)
            if ((m >> k) & 1u)
                s.insert(v[k]);
        out.insert(s);
    }
    return out;
}

inline Atoms universe(const seupdate::Alphabet& a) { return Atoms(a.names().begin(), a.names().end()); }

/// Classical satisfaction: body true implies head true.
inline bool models(const Atoms& j, const ORule& r) {
    const bool body = includes(j, r.bp) && disjoint(j, r.bn);
    const bool head = !disjoint(j, r.hp) || !includes(j, r.hn);
    return !body || head;
}

inline bool models(const Atoms& j, const std::vector<ORule>& rules) {
    return std::all_of(rules.begin(), rules.end(), [&](const ORule& r) { return models(j, r); });
}

inline std::vector<ORule> reduct(const std::vector<ORule>& rules, const Atoms& j) {
    std::vector<ORule> out;
    for (const auto& r : rules)
        if (includes(j, r.hn) && disjoint(j, r.bn))
            out.push_back({r.hp, {}, r.bp, {}});
    return out;
}

inline SESet se_models(const seupdate::Program& p) {
    const auto rules = rules_of(p);
    SESet out;
    for (const auto& j : subsets(universe(p.alphabet()))) {
        if (!models(j, rules))
            continue;
        const auto red = reduct(rules, j);
        for (const auto& i : subsets(j))
            if (models(i, red))
                out.insert({i, j});
    }
    return out;
}

inline std::vector<Atoms> answer_sets(const seupdate::Program& p) {
    const auto rules = rules_of(p);
    std::vector<Atoms> out;
    for (const auto& j : subsets(universe(p.alphabet()))) {
        if (!models(j, rules))
            continue;
        const auto red = reduct(rules, j);
        bool minimal = models(j, red);
        for (const auto& i : subsets(j))
            if (i != j && models(i, red))
                minimal = false;
        if (minimal)
            out.push_back(j);
    }
    return out;
}

inline SESet convert(const seupdate::SEModelSet& s, const seupdate::Alphabet& a) {
    SESet out;
    for (const auto& x : s)
        out.insert({names(x.here(), a), names(x.there(), a)});
    return out;
}

inline SESet universe_se(const Atoms& atoms) {
    SESet out;
    for (const auto& j : subsets(atoms))
        for (const auto& i : subsets(j))
            out.insert({i, j});
    return out;
}

/// The Winslett SE assignment written from its two conditions.
inline bool winslett_leq(const SE& x, const SE& y, const SE& z) {
    const auto& [i, j] = x;
    const auto dl1 = symdiff(y.second, j);
    const auto dl2 = symdiff(z.second, j);
    if (!includes(dl2, dl1))
        return false;
    if (dl1 != dl2)
        return true;
    return includes(minus(symdiff(z.first, i), dl1), minus(symdiff(y.first, i), dl1));
}

inline bool winslett_less(const SE& x, const SE& y, const SE& z) {
    return winslett_leq(x, y, z) && !winslett_leq(x, z, y);
}

inline SESet minima(const SESet& m, const SE& x) {
    SESet out;
    for (const auto& y : m) {
        bool dominated = false;
        for (const auto& z : m)
            if (winslett_less(x, z, y))
                dominated = true;
        if (!dominated)
            out.insert(y);
    }
    return out;
}

inline SESet update(const SESet& p, const SESet& u) {
    SESet out;
    for (const auto& x : p)
        for (const auto& y : minima(u, x))
            out.insert(y);
    return out;
}

/// Winslett PMA on model sets.
inline Worlds belief_update(const Worlds& phi, const Worlds& mu) {
    Worlds out;
    for (const auto& i : phi)
        for (const auto& j : mu) {
            bool minimal = true;
            for (const auto& k : mu) {
                const auto dk = symdiff(k, i), dj = symdiff(j, i);
                if (includes(dj, dk) && dk != dj)
                    minimal = false;
            }
            if (minimal)
                out.insert(j);
        }
    return out;
}

inline bool well_defined(const SESet& s) {
    for (const auto& [i, j] : s)
        if (!s.count({j, j}))
            return false;
    return true;
}

} // namespace oracle
