// Wall-clock cost of brute-force query answering as the alphabet grows.
// Measures only; there is no pass/fail threshold.

#include "seupdate/orders.hpp"
#include "seupdate/random.hpp"
#include "seupdate/update.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

using namespace seupdate;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Times query answering for the Winslett SE assignment"};
    std::size_t max_atoms = 5;
    std::size_t instances = 20;
    std::uint64_t seed = 1;
    app.add_option("--max-atoms", max_atoms, "Largest alphabet size")->check(CLI::Range(1, 8));
    app.add_option("--instances", instances, "Random instances per size")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Generator seed");
    CLI11_PARSE(app, argc, argv);

    const WinslettAssignment w;
    Rng rng(seed);
    std::printf("%5s %10s %14s %14s %9s\n", "atoms", "instances", "general_ms", "facts_ms", "entailed");
    for (std::size_t n = 1; n <= max_atoms; ++n) {
        const auto a = standard_alphabet(n);
        double general = 0, facts = 0;
        std::size_t entailed = 0;
        for (std::size_t k = 0; k < instances; ++k) {
            const auto p = random_program(a, rng), u = random_program(a, rng), q = random_program(a, rng);
            auto start = std::chrono::steady_clock::now();
            entailed += query(p, u, q, w) ? 1 : 0;
            general += seconds_since(start);

            const auto f = random_facts(a, rng, true);
            start = std::chrono::steady_clock::now();
            entailed += query(f, u, f, w) ? 1 : 0;
            facts += seconds_since(start);
        }
        const double scale = 1000.0 / static_cast<double>(instances);
        std::printf("%5zu %10zu %14.3f %14.3f %9zu\n", n, instances, general * scale, facts * scale, entailed);
    }
    return 0;
}
