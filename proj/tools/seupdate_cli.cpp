// Command-line front end. Exit codes: 0 holds/ok, 1 property fails, 2 parse or
// usage error, 3 alphabet error, 4 well-definedness failure, 5 unsupported size.

#include "seupdate/errors.hpp"
#include "seupdate/io.hpp"
#include "seupdate/orders.hpp"
#include "seupdate/postulates.hpp"
#include "seupdate/program.hpp"
#include "seupdate/random.hpp"
#include "seupdate/semantics.hpp"
#include "seupdate/support.hpp"
#include "seupdate/update.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace seupdate;
using nlohmann::json;

namespace {

enum Exit { ok = 0, fails = 1, parse_error = 2, alphabet_error = 3, not_well_defined = 4, unsupported_size = 5 };

struct Options {
    std::string alphabet;
    bool json = false;
    std::string op = "winslett";
    std::string assignment_file;
    std::string out;
    std::vector<std::string> files;
    std::string what;
    std::size_t alphabet_size = 2;
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    std::size_t samples = 1000;
    std::vector<std::string> postulates{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"};
};

/// Reasons to stop before running a command; mapped to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::string current;
    for (char c : list + ",") {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty())
                out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    return out;
}

/// Inputs parsed over one shared alphabet: --alphabet if given, otherwise the
/// assignment table's alphabet, otherwise the union of the atoms occurring in
/// the input files.
struct Inputs {
    Alphabet alphabet;
    std::vector<Program> programs;
    std::shared_ptr<const TableAssignment> table;
};

Inputs load(const Options& o) {
    std::vector<std::string> texts;
    for (const auto& f : o.files)
        texts.push_back(read_file(f));

    std::optional<Alphabet> table_alphabet;
    std::shared_ptr<const TableAssignment> table;
    if (!o.assignment_file.empty()) {
        std::istringstream in(read_file(o.assignment_file));
        auto [t, a] = read_assignment_table(in);
        table = std::move(t);
        table_alphabet = std::move(a);
    }

    std::optional<Alphabet> alphabet;
    if (!o.alphabet.empty())
        alphabet = Alphabet(split_names(o.alphabet));
    if (alphabet && table_alphabet && alphabet->names() != table_alphabet->names())
        throw AlphabetError("--alphabet " + alphabet->format(alphabet->full()) + " differs from the assignment's " +
                            table_alphabet->format(table_alphabet->full()));
    if (!alphabet)
        alphabet = table_alphabet;
    if (!alphabet) {
        Alphabet merged;
        for (const auto& t : texts)
            merged = merged.merged(atoms_in(t));
        alphabet = std::move(merged);
    }

    Inputs in{*alphabet, {}, std::move(table)};
    for (const auto& t : texts)
        in.programs.push_back(parse_program(t, in.alphabet));
    return in;
}

UpdateOperator make_operator(const Options& o, const Inputs& in) {
    if (in.table)
        return characterised_by(in.table);
    if (o.op == "winslett")
        return winslett_operator();
    if (o.op == "projection")
        return projection_operator();
    if (o.op == "rule-rejection")
        return rule_rejection_operator();
    throw UsageError("unknown operator '" + o.op + "'");
}

CheckMode make_mode(const Options& o) {
    if (o.mode == "exhaustive")
        return Exhaustive{};
    if (!o.seed)
        throw UsageError("--mode sampled requires --seed");
    return Sampled{*o.seed, o.samples};
}

std::string names_line(const Alphabet& a) {
    std::string out;
    for (const auto& n : a.names())
        out += " " + n;
    return out;
}

json names_json(const Alphabet& a) { return a.names(); }

void print_se(std::ostream& out, const char* label, const SEModelSet& s, const Alphabet& a) {
    out << label << " (" << s.size() << "):\n";
    for (const auto& x : s)
        out << "  " << x.to_string(a) << "\n";
}

void print_sets(std::ostream& out, const char* label, const Interpretations& sets, const Alphabet& a) {
    out << label << " (" << sets.size() << "):\n";
    for (auto j : sets)
        out << "  " << a.format(j) << "\n";
}

int cmd_models(const Options& o) {
    const auto in = load(o);
    const auto& p = in.programs.at(0);
    const auto se = se_models(p);
    const auto as = answer_sets(p);
    if (o.json) {
        std::cout << json{{"alphabet", names_json(in.alphabet)},
                          {"se_models", to_json(se, in.alphabet)},
                          {"answer_sets", to_json(as, in.alphabet)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "alphabet:" << names_line(in.alphabet) << "\n";
        print_se(std::cout, "SE-models", se, in.alphabet);
        print_sets(std::cout, "answer sets", as, in.alphabet);
    }
    return ok;
}

int cmd_update(const Options& o) {
    const auto in = load(o);
    const auto op = make_operator(o, in);
    const auto result = op(in.programs.at(0), in.programs.at(1));
    const auto se = se_models(result);
    auto text = render_program(result);
    if (!text.empty() && text.back() != '\n')
        text += '\n';
    if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << text))
            throw UsageError("cannot write " + o.out);
    }
    if (o.json) {
        std::cout << json{{"alphabet", names_json(in.alphabet)},
                          {"operator", op.name()},
                          {"program", text},
                          {"se_models", to_json(se, in.alphabet)},
                          {"answer_sets", to_json(answer_sets(result), in.alphabet)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "alphabet:" << names_line(in.alphabet) << "\n";
        std::cout << "operator: " << op.name() << "\n";
        std::cout << "program:\n" << text;
        print_se(std::cout, "SE-models", se, in.alphabet);
    }
    return ok;
}

void print_report(const PostulateReport& r, const Alphabet& a) {
    std::cout << "alphabet:" << names_line(a) << "\n";
    std::cout << "operator: " << r.operator_name << "\n";
    std::cout << "mode: " << r.mode << "\n";
    for (const auto& res : r.results) {
        std::cout << res.id << ": " << to_string(res.verdict) << " (" << res.instances << " instances)\n";
        for (const auto& [role, text] : res.witness) {
            std::string flat = text;
            std::replace(flat.begin(), flat.end(), '\n', ' ');
            while (!flat.empty() && flat.back() == ' ')
                flat.pop_back();
            std::cout << "  " << role << " = {" << flat << "}\n";
        }
        if (!res.reason.empty())
            std::cout << "  " << res.reason << "\n";
    }
}

int emit_report(const Options& o, const PostulateReport& r, const Alphabet& a) {
    if (o.json) {
        auto j = to_json(r);
        j["alphabet"] = names_json(a);
        std::cout << j.dump(2) << "\n";
    } else {
        print_report(r, a);
    }
    return r.all_hold() ? ok : fails;
}

int check_assignment(const Options& o, const Inputs& in) {
    std::shared_ptr<const PreorderAssignment> w = in.table;
    std::size_t n = in.table ? in.alphabet.size() : o.alphabet_size;
    if (!w)
        w = std::make_shared<WinslettAssignment>();
    const auto mode = make_mode(o);
    if (const auto* ex = std::get_if<Exhaustive>(&mode); ex && n > kMaxExhaustiveAtoms)
        throw UnsupportedSizeError("exhaustive checks support at most " + std::to_string(kMaxExhaustiveAtoms) +
                                   " atoms, got " + std::to_string(n));
    PostulateReport r{w->name(), n, std::holds_alternative<Exhaustive>(mode) ? "exhaustive" : "", {}};
    if (const auto* sm = std::get_if<Sampled>(&mode))
        r.mode = "sampled(seed=" + std::to_string(sm->seed) + ", samples=" + std::to_string(sm->samples) + ")";
    const auto add = [&r](std::string id, const PropertyCheck& c) {
        r.results.push_back(PostulateResult{std::move(id), c.verdict, c.instances, {}, c.witness});
    };
    add("preorder", check_preorder(*w, n));
    add("faithful", check_faithful(*w, n));
    add("organised", check_organised(*w, n, mode));
    add("well-defined", check_well_defined_assignment(*w, n, mode));
    return emit_report(o, r, in.table ? in.alphabet : standard_alphabet(n));
}

int cmd_check(const Options& o) {
    const auto in = load(o);
    const std::size_t n = in.table ? in.alphabet.size() : o.alphabet_size;
    if (o.what == "assignment")
        return check_assignment(o, in);
    const auto op = make_operator(o, in);
    const auto mode = make_mode(o);
    if (o.what == "support-factupdate")
        return emit_report(o, check_support_and_fact_update(op, n, mode), standard_alphabet(n));

    auto report = check_postulates(op, n, mode);
    const bool all = std::find(o.postulates.begin(), o.postulates.end(), "all") != o.postulates.end();
    if (!all) {
        for (const auto& id : o.postulates)
            if (!report.find(id))
                throw UsageError("unknown postulate '" + id + "'");
        std::erase_if(report.results, [&o](const PostulateResult& r) {
            return std::find(o.postulates.begin(), o.postulates.end(), r.id) == o.postulates.end();
        });
    }
    return emit_report(o, report, standard_alphabet(n));
}

int cmd_demo(const Options& o) {
    const Inputs in{Alphabet{"p", "q"}, {}, nullptr};
    const auto op = make_operator(o, in);
    const auto r = impossibility_demo(op);
    if (o.json) {
        const Alphabet a{"p", "q"};
        std::cout << json{{"alphabet", names_json(a)},
                          {"operator", op.name()},
                          {"p_update", to_json(r.p_update_models, a)},
                          {"q_update", to_json(r.q_update_models, a)},
                          {"fact_update", r.fact_update.holds},
                          {"support_p", r.support_p.holds},
                          {"support_q", r.support_q.holds},
                          {"outcome", to_string(r.outcome)},
                          {"narrative", r.narrative}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << r.narrative << "\n";
    }
    return ok;
}

int cmd_equiv(const Options& o) {
    const auto in = load(o);
    const auto s1 = se_models(in.programs.at(0)), s2 = se_models(in.programs.at(1));
    const bool holds = s1 == s2;
    std::optional<std::pair<SEInterpretation, int>> witness;
    for (const auto& x : s1)
        if (!witness && !s2.contains(x))
            witness.emplace(x, 1);
    for (const auto& x : s2)
        if (!witness && !s1.contains(x))
            witness.emplace(x, 2);
    if (o.json) {
        json j{{"alphabet", names_json(in.alphabet)}, {"equivalent", holds}};
        if (witness)
            j["witness"] = {{"se_interpretation", witness->first.to_string(in.alphabet)}, {"model_of", witness->second}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "alphabet:" << names_line(in.alphabet) << "\n";
        std::cout << "strongly equivalent: " << (holds ? "yes" : "no") << "\n";
        if (witness)
            std::cout << "witness: " << witness->first.to_string(in.alphabet) << " is an SE-model of "
                      << o.files.at(static_cast<std::size_t>(witness->second - 1)) << " only\n";
    }
    return holds ? ok : fails;
}

int cmd_query(const Options& o) {
    const auto in = load(o);
    const auto op = make_operator(o, in);
    const auto& p = in.programs.at(0);
    const auto& u = in.programs.at(1);
    const auto& q = in.programs.at(2);
    const bool holds = op.assignment() ? query(p, u, q, *op.assignment()) : strongly_entails(op(p, u), q);
    if (o.json)
        std::cout << json{{"alphabet", names_json(in.alphabet)}, {"operator", op.name()}, {"entailed", holds}}.dump(2)
                  << "\n";
    else
        std::cout << "alphabet:" << names_line(in.alphabet) << "\n"
                  << "operator: " << op.name() << "\n"
                  << "P + U strongly entails Q: " << (holds ? "yes" : "no") << "\n";
    return holds ? ok : fails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SE-model semantics and rule updates for answer-set programs"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--alphabet", o.alphabet, "Shared alphabet, comma separated (default: atoms of the inputs)");
    app.add_flag("--json", o.json, "JSON output");

    const auto add_operator = [&o](CLI::App* sub) {
        sub->add_option("--operator", o.op, "winslett | projection | rule-rejection")
            ->check(CLI::IsMember({"winslett", "projection", "rule-rejection"}));
        sub->add_option("--assignment-file", o.assignment_file, "Extensional assignment table");
    };

    auto* models = app.add_subcommand("models", "SE-models and answer sets of a program");
    models->add_option("file", o.files, "Program file")->required()->expected(1);

    auto* update = app.add_subcommand("update", "Update P by U");
    update->add_option("files", o.files, "P and U")->required()->expected(2);
    add_operator(update);
    update->add_option("--out", o.out, "Write the resulting program here");

    auto* check = app.add_subcommand("check", "Check assignment properties, postulates, or support and fact update");
    check->add_option("--what", o.what, "assignment | postulates | support-factupdate")
        ->required()
        ->check(CLI::IsMember({"assignment", "postulates", "support-factupdate"}));
    check->add_option("--alphabet-size", o.alphabet_size, "Number of atoms")->check(CLI::Range(1, 16));
    check->add_option("--mode", o.mode, "exhaustive | sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    check->add_option("--seed", o.seed, "Seed for sampled mode");
    check->add_option("--samples", o.samples, "Samples in sampled mode")->check(CLI::PositiveNumber);
    check->add_option("--postulates", o.postulates, "Postulate ids to report, or 'all'")->delimiter(',');
    add_operator(check);

    auto* demo = app.add_subcommand("demo-impossibility", "Support versus fact update on the P4 instance");
    demo->add_option("--operator", o.op, "winslett | projection | rule-rejection")
        ->check(CLI::IsMember({"winslett", "projection", "rule-rejection"}));

    auto* equiv = app.add_subcommand("equiv", "Strong equivalence of two programs");
    equiv->add_option("files", o.files, "Two program files")->required()->expected(2);

    auto* q = app.add_subcommand("query", "Does P + U strongly entail Q");
    q->add_option("files", o.files, "P, U and Q")->required()->expected(3);
    add_operator(q);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : parse_error;
    }

    try {
        if (models->parsed())
            return cmd_models(o);
        if (update->parsed())
            return cmd_update(o);
        if (check->parsed())
            return cmd_check(o);
        if (demo->parsed())
            return cmd_demo(o);
        if (equiv->parsed())
            return cmd_equiv(o);
        return cmd_query(o);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const AlphabetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return alphabet_error;
    } catch (const WellDefinednessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return not_well_defined;
    } catch (const UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return unsupported_size;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    }
}
