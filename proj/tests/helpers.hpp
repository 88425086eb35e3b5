#pragma once

#include "seupdate/io.hpp"
#include "seupdate/program.hpp"
#include "seupdate/se_interpretation.hpp"

#include <initializer_list>
#include <string_view>

namespace testing {

inline seupdate::Program prog(std::string_view text, const seupdate::Alphabet& a) { return seupdate::parse_program(text, a); }

inline seupdate::SEInterpretation se(std::string_view text, const seupdate::Alphabet& a) {
    return seupdate::parse_se_interpretation(text, a);
}

inline seupdate::SEModelSet se_set(const seupdate::Alphabet& a, std::initializer_list<std::string_view> members) {
    seupdate::SEModelSet out(a.size());
    for (auto m : members)
        out.insert(se(m, a));
    return out;
}

} // namespace testing
