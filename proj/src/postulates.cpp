#include "seupdate/postulates.hpp"

#include "seupdate/errors.hpp"
#include "seupdate/random.hpp"
#include "seupdate/realization.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace seupdate {

const PostulateResult* PostulateReport::find(const std::string& id) const {
    for (const auto& r : results)
        if (r.id == id)
            return &r;
    return nullptr;
}

bool PostulateReport::all_hold() const {
    return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.verdict == Verdict::fails; });
}

const std::vector<std::string>& rule_postulate_ids() {
    static const std::vector<std::string> ids = {"P1", "P2", "P3", "P4", "P4.1", "P4.2", "P5", "P6", "P7", "P8",
                                                 "Initialisation", "Idempotence", "Tautology", "Absorption",
                                                 "Augmentation"};
    return ids;
}

namespace {

/// Answers SE(op(synt(a), synt(b))) for well-defined sets a, b. Exhaustive
/// runs fill a table over all well-defined sets up front; other sets are
/// computed on demand and memoized.
class UpdateOracle {
public:
    UpdateOracle(const UpdateOperator& op, Alphabet alphabet) : op_(op), alphabet_(std::move(alphabet)) {}

    void tabulate(std::vector<SEModelSet> sets, std::size_t threads) {
        sets_ = std::move(sets);
        for (std::size_t k = 0; k < sets_.size(); ++k)
            position_.emplace(sets_[k], k);
        std::vector<Program> programs;
        programs.reserve(sets_.size());
        for (const auto& s : sets_)
            programs.push_back(realize(s, alphabet_));
        const std::size_t count = sets_.size();
        table_.assign(count * count, SEModelSet{});
        parallel_for(count, threads, [&](std::size_t i) {
            for (std::size_t j = 0; j < count; ++j)
                table_[i * count + j] = se_models(op_(programs[i], programs[j]));
        });
    }

    const std::vector<SEModelSet>& sets() const noexcept { return sets_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t atom_count() const noexcept { return alphabet_.size(); }

    const SEModelSet& operator()(const SEModelSet& a, const SEModelSet& b) const {
        if (!sets_.empty()) {
            auto i = position_.find(a);
            auto j = position_.find(b);
            if (i != position_.end() && j != position_.end())
                return table_[i->second * sets_.size() + j->second];
        }
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, se_models(op_(program(a), program(b)))).first;
        return it->second;
    }

    const Program& program(const SEModelSet& s) const {
        auto it = programs_.find(s);
        if (it == programs_.end())
            it = programs_.emplace(s, realize(s, alphabet_)).first;
        return it->second;
    }

    static void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
        if (threads <= 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(threads, count); ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                        next = count;
                    }
                }
            });
        for (auto& th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

private:
    const UpdateOperator& op_;
    Alphabet alphabet_;
    std::vector<SEModelSet> sets_;
    std::unordered_map<SEModelSet, std::size_t, SEModelSetHash> position_;
    std::vector<SEModelSet> table_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<SEModelSet, SEModelSet>, SEModelSet> memo_;
    mutable std::map<SEModelSet, Program> programs_;
};

enum class Outcome { vacuous, satisfied, violated };

struct Evaluation {
    Outcome outcome = Outcome::satisfied;
    std::string reason;
};

using Roles = std::vector<SEModelSet>;

/// A postulate stated on SE-model sets of its argument programs.
struct SemanticPostulate {
    std::string id;
    std::vector<std::string> roles;
    std::function<Evaluation(const UpdateOracle&, const Roles&)> evaluate;
};

Evaluation holds_if(bool ok, const std::function<std::string()>& reason) {
    if (ok)
        return {Outcome::satisfied, {}};
    return {Outcome::violated, reason()};
}

std::string show(const SEModelSet& s, const UpdateOracle& u) { return s.to_string(u.alphabet()); }

const std::vector<SemanticPostulate>& semantic_postulates() {
    using O = UpdateOracle;
    static const std::vector<SemanticPostulate> all = {
        {"P1", {"P", "U"},
         [](const O& upd, const Roles& r) {
             const auto& res = upd(r[0], r[1]);
             return holds_if(res.subset_of(r[1]),
                             [&] { return "SE(P + U) = " + show(res, upd) + " is not contained in SE(U)"; });
         }},
        {"P2", {"P", "U"},
         [](const O& upd, const Roles& r) {
             if (!r[0].subset_of(r[1]))
                 return Evaluation{Outcome::vacuous, {}};
             const auto& res = upd(r[0], r[1]);
             return holds_if(res == r[0], [&] {
                 return "P entails U but SE(P + U) = " + show(res, upd) + " differs from SE(P) = " + show(r[0], upd);
             });
         }},
        {"P3", {"P", "U"},
         [](const O& upd, const Roles& r) {
             if (r[0].empty() || r[1].empty())
                 return Evaluation{Outcome::vacuous, {}};
             return holds_if(!upd(r[0], r[1]).empty(), [] { return std::string("SE(P + U) is empty"); });
         }},
        {"P5", {"P", "U", "V"},
         [](const O& upd, const Roles& r) {
             const auto lhs = upd(r[0], r[1]) & r[2];
             const auto& rhs = upd(r[0], r[1] & r[2]);
             return holds_if(lhs.subset_of(rhs), [&] {
                 return "SE((P + U) & V) = " + show(lhs, upd) + " is not contained in SE(P + (U & V)) = " +
                        show(rhs, upd);
             });
         }},
        {"P6", {"P", "U", "V"},
         [](const O& upd, const Roles& r) {
             const auto& pu = upd(r[0], r[1]);
             const auto& pv = upd(r[0], r[2]);
             if (!pu.subset_of(r[2]) || !pv.subset_of(r[1]))
                 return Evaluation{Outcome::vacuous, {}};
             return holds_if(pu == pv, [&] {
                 return "SE(P + U) = " + show(pu, upd) + " differs from SE(P + V) = " + show(pv, upd);
             });
         }},
        {"P7", {"P", "U", "V"},
         [](const O& upd, const Roles& r) {
             if (!is_basic_set(r[0]))
                 return Evaluation{Outcome::vacuous, {}};
             const auto lhs = upd(r[0], r[1]) & upd(r[0], r[2]);
             const auto& rhs = upd(r[0], r[1] | r[2]);
             return holds_if(lhs.subset_of(rhs), [&] {
                 return "SE((P + U) & (P + V)) = " + show(lhs, upd) + " is not contained in SE(P + (U | V)) = " +
                        show(rhs, upd);
             });
         }},
        {"P8", {"P", "Q", "U"},
         [](const O& upd, const Roles& r) {
             const auto& lhs = upd(r[0] | r[1], r[2]);
             const auto rhs = upd(r[0], r[2]) | upd(r[1], r[2]);
             return holds_if(lhs == rhs, [&] {
                 return "SE((P | Q) + U) = " + show(lhs, upd) + " differs from SE((P + U) | (Q + U)) = " +
                        show(rhs, upd);
             });
         }},
        {"Initialisation", {"U"},
         [](const O& upd, const Roles& r) {
             const auto& res = upd(SEModelSet::universe(upd.atom_count()), r[0]);
             return holds_if(res == r[0], [&] { return "SE({} + U) = " + show(res, upd) + " differs from SE(U)"; });
         }},
        {"Idempotence", {"P"},
         [](const O& upd, const Roles& r) {
             const auto& res = upd(r[0], r[0]);
             return holds_if(res == r[0], [&] { return "SE(P + P) = " + show(res, upd) + " differs from SE(P)"; });
         }},
        {"Tautology", {"P"},
         [](const O& upd, const Roles& r) {
             const auto& res = upd(r[0], SEModelSet::universe(upd.atom_count()));
             return holds_if(res == r[0], [&] { return "SE(P + {}) = " + show(res, upd) + " differs from SE(P)"; });
         }},
        {"Absorption", {"P", "U"},
         [](const O& upd, const Roles& r) {
             const auto& once = upd(r[0], r[1]);
             const auto& twice = upd(once, r[1]);
             return holds_if(twice == once, [&] {
                 return "SE((P + U) + U) = " + show(twice, upd) + " differs from SE(P + U) = " + show(once, upd);
             });
         }},
        {"Augmentation", {"P", "U", "V"},
         [](const O& upd, const Roles& r) {
             if (!r[2].subset_of(r[1]))
                 return Evaluation{Outcome::vacuous, {}};
             const auto& lhs = upd(upd(r[0], r[1]), r[2]);
             const auto& rhs = upd(r[0], r[2]);
             return holds_if(lhs == rhs, [&] {
                 return "SE((P + U) + V) = " + show(lhs, upd) + " differs from SE(P + V) = " + show(rhs, upd);
             });
         }},
    };
    return all;
}

const SemanticPostulate* find_semantic(const std::string& id) {
    for (const auto& p : semantic_postulates())
        if (p.id == id)
            return &p;
    return nullptr;
}

bool is_syntactic(const std::string& id) { return id == "P4" || id == "P4.1" || id == "P4.2"; }

/// Removing a total <J,J> also removes every <I,J>, so the set stays well-defined.
SEModelSet without(const SEModelSet& s, const SEInterpretation& x) {
    SEModelSet out = s;
    if (!x.is_total()) {
        out.erase(x);
        return out;
    }
    for (const auto& y : s)
        if (y.there() == x.there())
            out.erase(y);
    return out;
}

Roles shrink(const SemanticPostulate& p, const UpdateOracle& upd, Roles roles) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < roles.size() && !progress; ++k) {
            for (const auto& x : roles[k]) {
                Roles candidate = roles;
                candidate[k] = without(roles[k], x);
                if (p.evaluate(upd, candidate).outcome == Outcome::violated) {
                    roles = std::move(candidate);
                    progress = true;
                    break;
                }
            }
        }
    }
    return roles;
}

PostulateResult fail_result(const SemanticPostulate& p, const UpdateOracle& upd, const Roles& found,
                            std::size_t instances) {
    const Roles roles = shrink(p, upd, found);
    PostulateResult out{p.id, Verdict::fails, instances, {}, p.evaluate(upd, roles).reason};
    for (std::size_t k = 0; k < roles.size(); ++k)
        out.witness[p.roles[k]] = render_program(upd.program(roles[k]));
    return out;
}

/// Least failing tuple in lexicographic index order, searched in parallel over the first index.
PostulateResult check_exhaustive(const SemanticPostulate& p, const UpdateOracle& upd, std::size_t threads) {
    const auto& sets = upd.sets();
    const std::size_t count = sets.size();
    const std::size_t arity = p.roles.size();
    std::atomic<std::size_t> instances{0};
    std::atomic<std::size_t> best{count};
    std::vector<std::vector<std::size_t>> first_failure(count);

    UpdateOracle::parallel_for(count, threads, [&](std::size_t head) {
        if (head > best.load())
            return;
        std::vector<std::size_t> idx(arity, 0);
        idx[0] = head;
        Roles roles(arity);
        std::size_t local = 0;
        while (true) {
            for (std::size_t k = 0; k < arity; ++k)
                roles[k] = sets[idx[k]];
            const auto e = p.evaluate(upd, roles);
            if (e.outcome != Outcome::vacuous)
                ++local;
            if (e.outcome == Outcome::violated) {
                first_failure[head] = idx;
                for (std::size_t cur = best.load(); head < cur && !best.compare_exchange_weak(cur, head);) {
                }
                break;
            }
            std::size_t k = arity;
            while (k > 1 && ++idx[k - 1] == count)
                idx[--k] = 0;
            if (k <= 1)
                break;
        }
        instances += local;
    });

    if (best.load() == count)
        return PostulateResult{p.id, Verdict::holds, instances.load(), {}, {}};
    Roles roles;
    for (auto i : first_failure[best.load()])
        roles.push_back(sets[i]);
    return fail_result(p, upd, roles, instances.load());
}

PostulateResult check_sampled(const SemanticPostulate& p, const UpdateOracle& upd, const Sampled& mode) {
    Rng rng(mode.seed);
    std::size_t instances = 0;
    for (std::size_t s = 0; s < mode.samples; ++s) {
        Roles roles;
        for (std::size_t k = 0; k < p.roles.size(); ++k)
            roles.push_back(random_well_defined_set(upd.atom_count(), rng));
        // Basic originals are rare among random sets; draw them directly.
        if (p.id == "P7") {
            const auto x = se_from_index(uniform_below(rng, se_universe_size(upd.atom_count())), upd.atom_count());
            roles[0] = SEModelSet(upd.atom_count(), {x, x.star()});
        }
        const auto e = p.evaluate(upd, roles);
        if (e.outcome != Outcome::vacuous)
            ++instances;
        if (e.outcome == Outcome::violated)
            return fail_result(p, upd, roles, instances);
    }
    return PostulateResult{p.id, Verdict::no_counterexample, instances, {}, {}};
}

struct SyntacticInstance {
    Program p, q, u, v;
};

/// P4 and its weakenings on concrete programs. Returns the reason on violation.
std::optional<std::string> violates_syntactic(const std::string& id, const UpdateOperator& op,
                                              const SyntacticInstance& s) {
    const auto& a = s.p.alphabet();
    auto show_models = [&](const Program& x) { return se_models(x).to_string(a); };
    if (id == "P4") {
        if (!strongly_equivalent(s.p, s.q) || !strongly_equivalent(s.u, s.v))
            return std::nullopt;
        const auto lhs = op(s.p, s.u);
        const auto rhs = op(s.q, s.v);
        if (strongly_equivalent(lhs, rhs))
            return std::nullopt;
        return "SE(P + U) = " + show_models(lhs) + " differs from SE(Q + V) = " + show_models(rhs);
    }
    if (id == "P4.1") {
        if (!strongly_equivalent(s.p, s.q))
            return std::nullopt;
        const auto lhs = op(s.p, s.u);
        const auto rhs = op(s.q, s.u);
        if (strongly_equivalent(lhs, rhs))
            return std::nullopt;
        return "SE(P + U) = " + show_models(lhs) + " differs from SE(Q + U) = " + show_models(rhs);
    }
    if (!strongly_equivalent(s.u, s.v))
        return std::nullopt;
    const auto lhs = op(s.p, s.u);
    const auto rhs = op(s.p, s.v);
    if (strongly_equivalent(lhs, rhs))
        return std::nullopt;
    return "SE(P + U) = " + show_models(lhs) + " differs from SE(P + V) = " + show_models(rhs);
}

std::map<std::string, std::string> syntactic_witness(const std::string& id, const SyntacticInstance& s) {
    std::map<std::string, std::string> w{{"P", render_program(s.p)}, {"U", render_program(s.u)}};
    if (id != "P4.2")
        w["Q"] = render_program(s.q);
    if (id != "P4.1")
        w["V"] = render_program(s.v);
    return w;
}

/// P4 family over pairs of originals and updates, each paired with a random
/// syntactic variant. Variants are seeded per pair so results do not depend
/// on scheduling.
std::vector<PostulateResult> check_syntactic(const UpdateOperator& op, const Alphabet& alphabet,
                                             const std::vector<SEModelSet>& originals,
                                             const std::vector<SEModelSet>& updates, bool all_pairs,
                                             std::uint64_t seed, Verdict pass, std::size_t threads) {
    static const std::vector<std::string> ids = {"P4", "P4.1", "P4.2"};
    const std::size_t pairs = all_pairs ? originals.size() * updates.size() : originals.size();
    struct Failure {
        std::size_t pair;
        std::string reason;
        std::map<std::string, std::string> witness;
    };
    std::vector<std::vector<std::optional<Failure>>> failures(ids.size(), std::vector<std::optional<Failure>>(pairs));

    UpdateOracle::parallel_for(pairs, threads, [&](std::size_t k) {
        const auto& ps = all_pairs ? originals[k / updates.size()] : originals[k];
        const auto& us = all_pairs ? updates[k % updates.size()] : updates[k];
        Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (k + 1)));
        SyntacticInstance s{realize(ps, alphabet), Program(alphabet), realize(us, alphabet), Program(alphabet)};
        s.q = syntactic_variant(s.p, rng);
        s.v = syntactic_variant(s.u, rng);
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (auto reason = violates_syntactic(ids[i], op, s))
                failures[i][k] = Failure{k, *reason, syntactic_witness(ids[i], s)};
    });

    std::vector<PostulateResult> out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        PostulateResult r{ids[i], pass, pairs, {}, {}};
        for (const auto& f : failures[i]) {
            if (f) {
                r.verdict = Verdict::fails;
                r.reason = f->reason;
                r.witness = f->witness;
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t resolve_threads(std::size_t threads) {
    if (threads != 0)
        return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

PostulateReport check_postulates(const UpdateOperator& op, std::size_t atom_count, const CheckMode& mode,
                                 std::size_t threads) {
    if (atom_count == 0)
        throw AlphabetError("postulate checking needs a non-empty alphabet");
    threads = resolve_threads(threads);
    const Alphabet alphabet = standard_alphabet(atom_count);
    UpdateOracle upd(op, alphabet);
    PostulateReport report{op.name(), atom_count, {}, {}};
    std::vector<PostulateResult> syntactic;

    if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
        if (atom_count > std::min(ex->max_alphabet, kMaxExhaustiveAtoms))
            throw UnsupportedSizeError("exhaustive postulate checking supports at most " +
                                       std::to_string(std::min(ex->max_alphabet, kMaxExhaustiveAtoms)) + " atoms");
        report.mode = "exhaustive";
        upd.tabulate(all_well_defined_sets(atom_count), threads);
        syntactic = check_syntactic(op, alphabet, upd.sets(), upd.sets(), true, 0, Verdict::holds, threads);
        for (const auto& p : semantic_postulates())
            report.results.push_back(check_exhaustive(p, upd, threads));
    } else {
        const auto& sm = std::get<Sampled>(mode);
        require_enumerable(atom_count);
        report.mode = "sampled(seed=" + std::to_string(sm.seed) + ", samples=" + std::to_string(sm.samples) + ")";
        Rng rng(sm.seed);
        std::vector<SEModelSet> originals, updates;
        for (std::size_t s = 0; s < sm.samples; ++s) {
            originals.push_back(random_well_defined_set(atom_count, rng));
            updates.push_back(random_well_defined_set(atom_count, rng));
        }
        syntactic = check_syntactic(op, alphabet, originals, updates, false, sm.seed, Verdict::no_counterexample,
                                    threads);
        for (const auto& p : semantic_postulates())
            report.results.push_back(check_sampled(p, upd, sm));
    }
    for (auto& r : syntactic)
        report.results.push_back(std::move(r));

    const auto& order = rule_postulate_ids();
    std::sort(report.results.begin(), report.results.end(), [&order](const auto& a, const auto& b) {
        return std::find(order.begin(), order.end(), a.id) < std::find(order.begin(), order.end(), b.id);
    });
    return report;
}

bool refalsifies(const UpdateOperator& op, const PostulateResult& result, const Alphabet& alphabet) {
    auto program = [&](const std::string& role) {
        auto it = result.witness.find(role);
        if (it == result.witness.end())
            throw PreconditionError("witness lacks program " + role);
        return parse_program(it->second, alphabet);
    };
    if (is_syntactic(result.id)) {
        SyntacticInstance s{program("P"), Program(alphabet), program("U"), Program(alphabet)};
        s.q = result.id == "P4.2" ? s.p : program("Q");
        s.v = result.id == "P4.1" ? s.u : program("V");
        return violates_syntactic(result.id, op, s).has_value();
    }
    const auto* p = find_semantic(result.id);
    if (!p)
        throw PreconditionError("unknown postulate " + result.id);
    UpdateOracle upd(op, alphabet);
    Roles roles;
    for (const auto& role : p->roles)
        roles.push_back(se_models(program(role)));
    return p->evaluate(upd, roles).outcome == Outcome::violated;
}

// ---------------------------------------------------------------------------
// Classical postulates

namespace {

/// Model sets over n <= 3 atoms as bit masks over the 2^n interpretations.
using ModelMask = std::uint32_t;

Interpretations unpack(ModelMask m, std::size_t worlds) {
    Interpretations out;
    for (std::size_t w = 0; w < worlds; ++w)
        if ((m >> w) & 1u)
            out.push_back(AtomSet{static_cast<AtomSet::Bits>(w)});
    return out;
}

ModelMask pack(const Interpretations& models) {
    ModelMask m = 0;
    for (auto i : models)
        m |= ModelMask{1} << i.bits();
    return m;
}

std::string show_models(ModelMask m, std::size_t worlds, const Alphabet& a) {
    std::string out = "{";
    bool first = true;
    for (auto i : unpack(m, worlds)) {
        if (!first)
            out += ",";
        first = false;
        out += a.format(i);
    }
    return out + "}";
}

} // namespace

PostulateReport check_belief_postulates(const BeliefUpdate& op, std::size_t atom_count, const std::string& name) {
    if (atom_count == 0 || atom_count > 3)
        throw UnsupportedSizeError("classical postulate checking supports 1 to 3 atoms");
    const Alphabet alphabet = standard_alphabet(atom_count);
    const std::size_t worlds = std::size_t{1} << atom_count;
    const std::size_t sets = std::size_t{1} << worlds;
    std::vector<ModelMask> table(sets * sets);
    for (std::size_t f = 0; f < sets; ++f)
        for (std::size_t m = 0; m < sets; ++m)
            table[f * sets + m] = pack(op(unpack(static_cast<ModelMask>(f), worlds), unpack(static_cast<ModelMask>(m), worlds)));
    auto upd = [&](ModelMask f, ModelMask m) { return table[f * sets + m]; };
    auto subset = [](ModelMask a, ModelMask b) { return (a & ~b) == 0; };
    auto show = [&](ModelMask m) { return show_models(m, worlds, alphabet); };

    PostulateReport report{name, atom_count, "exhaustive", {}};
    auto run = [&](const std::string& id, std::vector<std::string> roles,
                   const std::function<std::optional<bool>(const std::vector<ModelMask>&)>& holds) {
        PostulateResult r{id, Verdict::holds, 0, {}, {}};
        std::vector<ModelMask> idx(roles.size(), 0);
        while (true) {
            if (const auto ok = holds(idx)) {
                ++r.instances;
                if (!*ok) {
                    r.verdict = Verdict::fails;
                    for (std::size_t k = 0; k < roles.size(); ++k)
                        r.witness[roles[k]] = show(idx[k]);
                    break;
                }
            }
            std::size_t k = roles.size();
            while (k > 0 && ++idx[k - 1] == sets)
                idx[--k] = 0;
            if (k == 0)
                break;
        }
        report.results.push_back(std::move(r));
    };

    run("B1", {"phi", "mu"}, [&](const auto& v) -> std::optional<bool> { return subset(upd(v[0], v[1]), v[1]); });
    run("B2", {"phi", "mu"}, [&](const auto& v) -> std::optional<bool> {
        if (!subset(v[0], v[1]))
            return std::nullopt;
        return upd(v[0], v[1]) == v[0];
    });
    run("B3", {"phi", "mu"}, [&](const auto& v) -> std::optional<bool> {
        if (v[0] == 0 || v[1] == 0)
            return std::nullopt;
        return upd(v[0], v[1]) != 0;
    });
    report.results.push_back(
        PostulateResult{"B4", Verdict::skipped, 0, {}, "operators on model sets are syntax-independent by construction"});
    run("B5", {"phi", "mu", "nu"},
        [&](const auto& v) -> std::optional<bool> { return subset(upd(v[0], v[1]) & v[2], upd(v[0], v[1] & v[2])); });
    run("B6", {"phi", "mu", "nu"}, [&](const auto& v) -> std::optional<bool> {
        if (!subset(upd(v[0], v[1]), v[2]) || !subset(upd(v[0], v[2]), v[1]))
            return std::nullopt;
        return upd(v[0], v[1]) == upd(v[0], v[2]);
    });
    run("B7", {"phi", "mu", "nu"}, [&](const auto& v) -> std::optional<bool> {
        if (std::popcount(v[0]) != 1)
            return std::nullopt;
        return subset(upd(v[0], v[1]) & upd(v[0], v[2]), upd(v[0], v[1] | v[2]));
    });
    run("B8", {"phi", "psi", "mu"},
        [&](const auto& v) -> std::optional<bool> { return upd(v[0] | v[1], v[2]) == (upd(v[0], v[2]) | upd(v[1], v[2])); });
    return report;
}

} // namespace seupdate
