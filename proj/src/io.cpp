#include "seupdate/io.hpp"

#include "seupdate/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace seupdate {

namespace {

nlohmann::json names(AtomSet set, const Alphabet& alphabet) { return alphabet.names_of(set); }

AtomSet atoms_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_array())
        throw Error("expected an array of atom names");
    AtomSet out;
    for (const auto& name : j)
        out = out.with(alphabet.require(name.get<std::string>()));
    return out;
}

Verdict verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::holds, Verdict::fails, Verdict::no_counterexample, Verdict::skipped})
        if (to_string(v) == s)
            return v;
    throw Error("unknown verdict '" + s + "'");
}

} // namespace

nlohmann::json to_json(const SEModelSet& models, const Alphabet& alphabet) {
    auto out = nlohmann::json::array();
    for (const auto& x : models)
        out.push_back({{"here", names(x.here(), alphabet)}, {"there", names(x.there(), alphabet)}});
    return out;
}

SEModelSet se_models_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_array())
        throw Error("expected an array of SE-interpretations");
    SEModelSet out(alphabet.size());
    for (const auto& x : j)
        out.insert(SEInterpretation(atoms_from_json(x.at("here"), alphabet), atoms_from_json(x.at("there"), alphabet)));
    return out;
}

nlohmann::json to_json(const Interpretations& interpretations, const Alphabet& alphabet) {
    auto out = nlohmann::json::array();
    for (auto i : interpretations)
        out.push_back(names(i, alphabet));
    return out;
}

nlohmann::json to_json(const PostulateReport& report) {
    auto results = nlohmann::json::array();
    for (const auto& r : report.results)
        results.push_back({{"id", r.id},
                           {"verdict", to_string(r.verdict)},
                           {"instances", r.instances},
                           {"witness", r.witness},
                           {"reason", r.reason}});
    return {{"operator", report.operator_name},
            {"atom_count", report.atom_count},
            {"mode", report.mode},
            {"results", results}};
}

PostulateReport report_from_json(const nlohmann::json& j) {
    PostulateReport out;
    out.operator_name = j.at("operator").get<std::string>();
    out.atom_count = j.at("atom_count").get<std::size_t>();
    out.mode = j.at("mode").get<std::string>();
    for (const auto& r : j.at("results"))
        out.results.push_back(PostulateResult{r.at("id").get<std::string>(),
                                              verdict_from_string(r.at("verdict").get<std::string>()),
                                              r.at("instances").get<std::size_t>(),
                                              r.at("witness").get<std::map<std::string, std::string>>(),
                                              r.at("reason").get<std::string>()});
    return out;
}

SEInterpretation parse_se_interpretation(std::string_view text, const Alphabet& alphabet) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw Error("malformed SE-interpretation '" + std::string(text) + "': expected '" + c + "'");
        ++pos;
    };
    auto set = [&] {
        expect('{');
        AtomSet out;
        skip();
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            return out;
        }
        while (true) {
            skip();
            const std::size_t start = pos;
            while (pos < text.size() && text[pos] != ',' && text[pos] != '}' && text[pos] != ' ')
                ++pos;
            out = out.with(alphabet.require(text.substr(start, pos - start)));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect('}');
            return out;
        }
    };
    expect('<');
    const AtomSet here = set();
    expect(',');
    const AtomSet there = set();
    expect('>');
    skip();
    if (pos != text.size())
        throw Error("trailing characters after SE-interpretation '" + std::string(text) + "'");
    if (!here.subset_of(there))
        throw Error("SE-interpretation '" + std::string(text) + "' has here not contained in there");
    return SEInterpretation(here, there);
}

void write_assignment_table(std::ostream& out, const PreorderAssignment& o, const Alphabet& alphabet) {
    const std::size_t n = alphabet.size();
    require_atom_count(o, n);
    out << "alphabet";
    for (const auto& name : alphabet.names())
        out << ' ' << name;
    out << '\n';
    const auto universe = SEModelSet::universe(n).members();
    for (const auto& x : universe) {
        out << "X " << x.to_string(alphabet) << '\n';
        for (const auto& y : universe) {
            for (std::size_t k = 0; k < universe.size(); ++k)
                out << (k ? " " : "") << (o.leq(x, y, universe[k]) ? '1' : '0');
            out << '\n';
        }
    }
}

std::pair<std::shared_ptr<const TableAssignment>, Alphabet> read_assignment_table(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) -> Error { return Error("line " + std::to_string(line_no) + ": " + what); };
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '%')
                continue;
            line = line.substr(first);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            return true;
        }
        return false;
    };

    if (!next())
        throw fail("missing alphabet header");
    std::istringstream header(line);
    std::string keyword;
    header >> keyword;
    if (keyword != "alphabet")
        throw fail("expected 'alphabet'");
    std::vector<std::string> atom_names;
    for (std::string name; header >> name;)
        atom_names.push_back(name);
    Alphabet alphabet;
    try {
        alphabet = Alphabet(atom_names);
    } catch (const Error& e) {
        throw fail(e.what());
    }
    if (alphabet.names() != atom_names)
        throw fail("alphabet atoms must be listed sorted and without repetition");

    const std::size_t n = alphabet.size();
    require_enumerable(n);
    const std::size_t points = se_universe_size(n);
    std::vector<std::vector<bool>> rows(points, std::vector<bool>(points * points));
    for (std::size_t xi = 0; xi < points; ++xi) {
        if (!next())
            throw fail("unexpected end of file, expected block " + std::to_string(xi + 1));
        if (line.rfind("X ", 0) != 0)
            throw fail("expected 'X <...>'");
        SEInterpretation x = SEInterpretation::total(AtomSet{});
        try {
            x = parse_se_interpretation(std::string_view(line).substr(2), alphabet);
        } catch (const Error& e) {
            throw fail(e.what());
        }
        if (se_index(x, n) != xi)
            throw fail("blocks must appear in canonical order");
        for (std::size_t yi = 0; yi < points; ++yi) {
            if (!next())
                throw fail("unexpected end of file inside a block");
            std::istringstream row(line);
            std::size_t zi = 0;
            for (std::string cell; row >> cell; ++zi) {
                if (zi >= points || (cell != "0" && cell != "1"))
                    throw fail("row must hold " + std::to_string(points) + " entries of 0 or 1");
                rows[xi][yi * points + zi] = cell == "1";
            }
            if (zi != points)
                throw fail("row must hold " + std::to_string(points) + " entries of 0 or 1");
        }
    }
    if (next())
        throw fail("trailing content after the last block");

    auto table = std::make_shared<const TableAssignment>(
        n,
        [&](const SEInterpretation& x, const SEInterpretation& y, const SEInterpretation& z) {
            return static_cast<bool>(rows[se_index(x, n)][se_index(y, n) * points + se_index(z, n)]);
        },
        "table");
    return {std::move(table), std::move(alphabet)};
}

} // namespace seupdate
