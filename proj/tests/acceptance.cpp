// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "support.hpp"
#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"
#include "symbreak/search.hpp"
#include "symbreak/strategies.hpp"
#include "tuple_oracle.hpp"

using namespace symbreak;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
    bool pass = false;
    std::string detail;
};

int chromatic_number(const Graph& g)
{
    for (int k = 1;; ++k)
        if (first_solution(graph_coloring(g, k).csp))
            return k;
}

// The first five seeds whose 8-vertex coloring instance, at its chromatic
// number, has a group within the default enumeration bound.
std::vector<ModelBundle> coloring_desk_instances()
{
    std::vector<ModelBundle> out;
    for (std::uint64_t seed = 1; out.size() < 5; ++seed) {
        const Graph g = random_block_graph(8, 4, seed);
        ModelBundle b = graph_coloring(g, chromatic_number(g));
        b.name = "coloring-8-4-" + std::to_string(seed) + "-k" + std::to_string(b.csp.value_count());
        try {
            enumerate_group(b.group);
        } catch (const GroupTooLarge&) {
            continue;
        }
        out.push_back(std::move(b));
    }
    return out;
}

Verdict running_example()
{
    auto mp = most_perfect_magic_square(4);
    const Symmetry flipv = square_symmetry(4, 16, "flipv");
    const Symmetry inv = value_inversion(4);
    struct Case {
        Symmetry g;
        std::vector<int> expected;
    };
    const std::vector<Case> cases{{Symmetry::identity(16, 16), {3}}, {flipv, {4}}, {compose(inv, flipv), {2}}};
    Verdict v{true, {}};
    for (const auto& c : cases) {
        const SymBreakSet image = apply_symmetry(c.g, mp.sbc);
        std::vector<int> admitted;
        for (int k = 1; k <= 4; ++k) {
            const auto a = test::square(mp.csp, k);
            if (satisfies(mp.csp, a) && satisfies(a, image.constraints))
                admitted.push_back(k);
        }
        std::string got;
        for (int k : admitted)
            got += "(" + std::to_string(k) + ")";
        v.detail += c.g.describe() + "->" + got + " ";
        v.pass = v.pass && admitted == c.expected;
    }
    return v;
}

Verdict proposition_suite(const std::vector<ModelBundle>& colorings)
{
    const auto start = Clock::now();
    std::vector<ModelBundle> bundles;
    bundles.push_back(most_perfect_magic_square(4));
    bundles.push_back(magic_square(3));
    bundles.push_back(efpa(3, 2, 2, 2));
    for (const auto& c : colorings)
        bundles.push_back(c);
    Verdict v{true, {}};
    int checks = 0;
    for (const auto& b : bundles) {
        const auto ctx = make_context(b);
        const auto results = check_all(ctx);
        std::fputs(report(ctx, results).c_str(), stdout);
        for (const auto& r : results) {
            ++checks;
            if (!r.passed) {
                v.pass = false;
                v.detail += b.name + ":" + to_string(r.proposition) + " failed; ";
            }
        }
    }
    const double t = seconds_since(start);
    if (t > 300.0) {
        v.pass = false;
        v.detail += "over five minutes; ";
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d checks on %zu instances in %.1fs", checks, bundles.size(), t);
    v.detail += buf;
    return v;
}

Verdict breaks_vs_eliminates()
{
    auto mp = most_perfect_magic_square(4);
    const Csp& csp = mp.csp;
    auto X = [&](int i, int j) { return csp.var(square_cell(4, i, j)); };
    const SymBreakSet nine{{less(X(1, 4), X(4, 1))}, "S"};
    const SymBreakSet cond{{implies(sum_eq({X(1, 1), X(4, 4)}, 17), less(X(1, 1), X(4, 4)))}, "S"};
    const Classification diag = classify(csp, nine, square_symmetry(4, 16, "diag"));
    const Classification r90 = classify(csp, nine, square_symmetry(4, 16, "rot90"));
    bool condOk = true;
    for (const auto& g : square_symmetries(4, 16))
        condOk = condOk && classify(csp, cond, g) == Classification::DoesNotBreak;
    return {diag == Classification::Eliminates && r90 == Classification::BreaksNotEliminates && condOk,
            std::string("diag: ") + to_string(diag) + ", rot90: " + to_string(r90) +
                ", conditional vs 8 geometric symmetries: " + (condOk ? "does-not-break" : "breaks")};
}

Verdict restart_identity()
{
    const std::vector<std::uint64_t> counts{658, 17143, 315267, 18808974};
    const auto t = expected_restart_cost(counts, 1000);
    const double sim = simulate_restart_cost(counts, 1000, 100000, 2008);
    const double err = std::abs(sim - 3658.0) / 3658.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "analytic %.6f, simulated %.1f over 1e5 trials (%.2f%%)", t ? *t : -1.0, sim,
                  100.0 * err);
    return {t && *t == 3658.0 && err < 0.02, buf};
}

Verdict self_consistent_restarts()
{
    const auto start = Clock::now();
    auto m = magic_square(5, MagicGroup::Rotations4);
    const std::uint64_t cutoff = 1000;
    const BranchSpec branch{VarHeuristic::FixedOrder, ValHeuristic::LexMin, 0};
    std::vector<std::uint64_t> counts;
    std::string measured;
    for (const char* lab : {"id", "rot90", "rot180", "rot270"}) {
        const auto r = solve(m.csp, apply_symmetry(square_symmetry(5, 25, lab), m.sbc), branch, cutoff);
        // A cut-off run only tells us the count exceeds c; any such value gives the same expectation.
        const std::uint64_t b = r.outcome == Outcome::CutoffReached ? cutoff + 1 : r.stats.backtracks;
        counts.push_back(b);
        measured += std::string(lab) + "=" + (b > cutoff ? ">" + std::to_string(cutoff) : std::to_string(b)) + " ";
    }
    const auto expected = expected_restart_cost(counts, cutoff);
    if (!expected)
        return {false, measured + "every rotation exceeds the cutoff"};
    const int seeds = 200;
    double total = 0.0;
    RestartConfig cfg;
    cfg.cutoff = cutoff;
    for (int s = 1; s <= seeds; ++s) {
        cfg.masterSeed = static_cast<std::uint64_t>(s);
        const auto r = run_model_restarts(m.csp, m.sbc, m.group, branch, cfg);
        if (r.outcome != Outcome::Solution)
            return {false, "seed " + std::to_string(s) + " ended without a solution"};
        total += static_cast<double>(r.stats.backtracks);
    }
    const double mean = total / seeds;
    const double err = std::abs(mean - *expected) / *expected;
    char buf[200];
    std::snprintf(buf, sizeof buf, "analytic %.1f, mean over %d seeds %.1f (%.2f%%), %.1fs", *expected, seeds, mean,
                  100.0 * err, seconds_since(start));
    return {err < 0.10, measured + buf};
}

std::uint64_t median(std::vector<std::uint64_t> v)
{
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

Verdict robustness()
{
    const std::uint64_t budget = 1000000;
    const int seeds = 5;
    auto backtracks = [&](const ModelBundle& b, bool restarts, bool random, std::uint64_t seed) {
        BranchSpec br{VarHeuristic::MinDomain, random ? ValHeuristic::RandomOrder : ValHeuristic::LexMin, seed};
        StrategyLimits lim;
        lim.budget = budget;
        if (!restarts)
            return run_static(b.csp, b.sbc, br, lim).stats.backtracks;
        RestartConfig cfg;
        cfg.cutoff = 1000;
        cfg.masterSeed = seed;
        return run_model_restarts(b.csp, b.sbc, b.group, br, cfg, lim).stats.backtracks;
    };
    std::vector<ModelBundle> instances{efpa(3, 3, 4, 5),          efpa(4, 3, 3, 3),       efpa(4, 4, 3, 4),
                                       efpa(5, 3, 3, 4),          efpa(4, 3, 4, 4),       efpa(5, 3, 4, 6),
                                       magic_square(4),           magic_square(5),        most_perfect_magic_square(4),
                                       graph_coloring(12, 4, 1), graph_coloring(14, 4, 2), graph_coloring(16, 4, 3)};
    int better = 0;
    for (const auto& b : instances) {
        std::vector<std::uint64_t> staticRandom, restartLex, restartRandom;
        const std::uint64_t staticLex = backtracks(b, false, false, 0);
        for (int s = 1; s <= seeds; ++s) {
            staticRandom.push_back(backtracks(b, false, true, static_cast<std::uint64_t>(s)));
            restartLex.push_back(backtracks(b, true, false, static_cast<std::uint64_t>(s)));
            restartRandom.push_back(backtracks(b, true, true, static_cast<std::uint64_t>(s)));
        }
        const double rs = robustness_ratio(staticLex, median(staticRandom));
        const double rr = robustness_ratio(median(restartLex), median(restartRandom));
        if (rr < rs)
            ++better;
        std::printf("robustness\t%s\tstatic %llu/%llu ratio %.2f\trestarts %llu/%llu ratio %.2f\n", b.name.c_str(),
                    static_cast<unsigned long long>(staticLex), static_cast<unsigned long long>(median(staticRandom)),
                    rs, static_cast<unsigned long long>(median(restartLex)),
                    static_cast<unsigned long long>(median(restartRandom)), rr);
    }
    const int n = static_cast<int>(instances.size());
    return {2 * better > n, "restarts less sensitive to value order on " + std::to_string(better) + " of " +
                                std::to_string(n) + " instances"};
}

Verdict propagator_soundness()
{
    std::size_t configs = 0, violations = 0, kinds = 0;
    std::string first;
    for (const auto& [c, arity] : test::constraint_catalog()) {
        const auto t = test::tuple_oracle(c, arity, 4);
        configs += t.configurations;
        violations += t.violations;
        ++kinds;
        if (t.violations && first.empty())
            first = std::string(c.kind_name()) + " " + t.firstViolation;
    }
    return {violations == 0, std::to_string(kinds) + " constraints, " + std::to_string(configs) +
                                 " domain configurations, " + std::to_string(violations) + " violations" +
                                 (first.empty() ? "" : " (first: " + first + ")")};
}

Verdict oracle_independence(const std::vector<ModelBundle>& colorings)
{
    std::vector<ModelBundle> bundles;
    bundles.push_back(most_perfect_magic_square(4));
    bundles.push_back(magic_square(3));
    bundles.push_back(magic_square(2));
    bundles.push_back(efpa(3, 2, 2, 2));
    bundles.push_back(efpa(2, 2, 1, 2));
    for (const auto& c : colorings)
        bundles.push_back(c);
    int runs = 0;
    for (const auto& b : bundles) {
        for (bool withSbc : {false, true}) {
            const Csp csp = withSbc ? with_constraints(b.csp, b.sbc) : b.csp;
            const auto oracle = enumerate_solutions(csp);
            for (auto var : {VarHeuristic::FixedOrder, VarHeuristic::MinDomain})
                for (auto val : {ValHeuristic::LexMin, ValHeuristic::RandomOrder}) {
                    SearchOptions o;
                    o.branch = {var, val, 5};
                    auto found = enumerate_all(csp, {}, o).solutions;
                    std::sort(found.begin(), found.end());
                    ++runs;
                    if (found != oracle)
                        return {false, b.name + (withSbc ? " + S" : "") + ": search found " +
                                           std::to_string(found.size()) + ", oracle " + std::to_string(oracle.size())};
                }
        }
    }
    return {true, std::to_string(runs) + " enumerations on " + std::to_string(bundles.size()) +
                      " instances agree exactly"};
}

} // namespace

int main()
{
    const auto colorings = coloring_desk_instances();
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "running example", running_example},
        {2, "proposition suite", [&] { return proposition_suite(colorings); }},
        {3, "breaks vs eliminates", breaks_vs_eliminates},
        {4, "expected restart identity", restart_identity},
        {5, "self-consistent restart expectation", self_consistent_restarts},
        {6, "value-order robustness", robustness},
        {7, "propagator soundness", propagator_soundness},
        {8, "oracle independence", [&] { return oracle_independence(colorings); }},
    };
    int failed = 0;
    std::vector<std::string> lines;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += v.pass ? 0 : 1;
        char head[96];
        std::snprintf(head, sizeof head, "%s criterion %d (%s): ", v.pass ? "PASS" : "FAIL", c.id, c.name);
        lines.push_back(head + v.detail);
        std::printf("%s\n", lines.back().c_str());
        std::fflush(stdout);
    }
    std::printf("\nsummary\n");
    for (const auto& l : lines)
        std::printf("%s\n", l.c_str());
    return failed == 0 ? 0 : 1;
}
