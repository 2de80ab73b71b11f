#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"
#include "symbreak/strategies.hpp"

using namespace symbreak;

namespace {
const std::vector<std::uint64_t> kCounts{658, 17143, 315267, 18808974};
}

TEST_CASE("expected restart cost")
{
    CHECK(*expected_restart_cost(kCounts, 1000) == doctest::Approx(3658.0).epsilon(1e-12));
    CHECK(*expected_restart_cost(std::vector<std::uint64_t>{5}, 5) == 5.0);
    CHECK(*expected_restart_cost(std::vector<std::uint64_t>{5}, 100) == 5.0);
    CHECK(*expected_restart_cost(kCounts, 20000) == doctest::Approx(28900.5).epsilon(1e-12));
    CHECK_FALSE(expected_restart_cost(kCounts, 100));
    CHECK_THROWS(simulate_restart_cost(kCounts, 100, 10, 1));
}

TEST_CASE("expected restart cost is the fixed point of the one-step recurrence")
{
    for (std::uint64_t c : {700ULL, 1000ULL, 20000ULL, 400000ULL}) {
        const double t = *expected_restart_cost(kCounts, c);
        double rhs = 0.0;
        for (auto b : kCounts)
            rhs += b <= c ? static_cast<double>(b) : static_cast<double>(c) + t;
        CHECK(rhs / 4.0 == doctest::Approx(t).epsilon(1e-12));
    }
}

TEST_CASE("simulated restart cost")
{
    const double sim = simulate_restart_cost(kCounts, 20000, 100000, 77);
    CHECK(std::abs(sim - 28900.5) / 28900.5 < 0.02);
}

TEST_CASE("robustness ratio")
{
    CHECK(robustness_ratio(10, 40) == 4.0);
    CHECK(robustness_ratio(40, 10) == 4.0);
    CHECK(robustness_ratio(0, 3) == 3.0);
}

TEST_CASE("static posting of the running example set")
{
    auto mp = most_perfect_magic_square(4);
    auto r = run_static(mp.csp, mp.sbc, BranchSpec{});
    REQUIRE(r.outcome == Outcome::Solution);
    CHECK(satisfies(*r.solution, mp.sbc.constraints));
    CHECK(r.provedOptimal);

    auto plain = run_static(mp.csp, {}, BranchSpec{});
    CHECK(plain.outcome == Outcome::Solution);
    CHECK(satisfies(mp.csp, *plain.solution));
}

TEST_CASE("restarts over the trivial group behave like static posting")
{
    auto m = magic_square(4);
    SymmetryGroup trivial(m.csp.var_count(), m.csp.value_count());
    RestartConfig cfg;
    cfg.cutoff = 1000000;
    auto a = run_model_restarts(m.csp, m.sbc, trivial, BranchSpec{}, cfg);
    auto b = run_static(m.csp, m.sbc, BranchSpec{});
    CHECK(a.outcome == b.outcome);
    CHECK(a.solution == b.solution);
    CHECK(a.stats.backtracks == b.stats.backtracks);
    REQUIRE(a.log.size() == 1);
    CHECK(a.log[0].symmetry == "id");
}

TEST_CASE("restart runs are reproducible and respect the final symmetry")
{
    auto m = magic_square(5, MagicGroup::Rotations4);
    RestartConfig cfg;
    cfg.cutoff = 1000;
    cfg.masterSeed = 42;
    auto a = run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, cfg);
    auto b = run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, cfg);
    REQUIRE(a.outcome == Outcome::Solution);
    REQUIRE(a.log.size() == b.log.size());
    for (std::size_t i = 0; i < a.log.size(); ++i) {
        CHECK(format_log_entry(a.log[i]) == format_log_entry(b.log[i]));
        if (i + 1 < a.log.size())
            CHECK(a.log[i].backtracks == cfg.cutoff);
    }
    CHECK(a.solution == b.solution);
    CHECK(a.stats.restarts + 1 == a.log.size());
    REQUIRE(a.finalSymmetry);
    CHECK(satisfies(*a.solution, apply_symmetry(*a.finalSymmetry, m.sbc).constraints));
    CHECK(satisfies(m.csp, *a.solution));
}

TEST_CASE("exhaustion is only reported by a restart that finished")
{
    auto m = magic_square(2);
    RestartConfig cfg;
    cfg.cutoff = 1;
    cfg.maxRestarts = 5;
    auto r = run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, cfg);
    REQUIRE_FALSE(r.log.empty());
    if (r.outcome == Outcome::Exhausted)
        CHECK(r.log.back().outcome == Outcome::Exhausted);
    else
        CHECK(r.outcome == Outcome::CutoffReached);
    for (const auto& e : r.log)
        CHECK(e.backtracks <= cfg.cutoff);

    cfg.cutoff = 1000;
    auto done = run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, cfg);
    CHECK(done.outcome == Outcome::Exhausted);
    CHECK(done.log.back().outcome == Outcome::Exhausted);
}

TEST_CASE("a restart budget stops the loop")
{
    auto m = magic_square(5, MagicGroup::Rotations4);
    RestartConfig cfg;
    cfg.cutoff = 10;
    cfg.maxRestarts = 3;
    auto r = run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, cfg);
    CHECK(r.outcome == Outcome::CutoffReached);
    CHECK(r.log.size() == 4);
    CHECK_THROWS(run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, RestartConfig{0, {}, 0}));

    StrategyLimits lim;
    lim.budget = 25;
    cfg.maxRestarts.reset();
    auto b = run_model_restarts(m.csp, m.sbc, m.group, BranchSpec{}, cfg, lim);
    CHECK(b.stats.backtracks <= 25);
}

TEST_CASE("restarts on an optimization problem keep the incumbent")
{
    auto c = graph_coloring(8, 4, 5, 5);
    RestartConfig cfg;
    cfg.cutoff = 1000;
    cfg.masterSeed = 3;
    auto r = run_model_restarts(c.csp, c.sbc, c.group, BranchSpec{}, cfg);
    CHECK(r.outcome == Outcome::Solution);
    CHECK(r.provedOptimal);
    CHECK(r.objective == 4);
}

TEST_CASE("symmetry breaking during search as a strategy")
{
    auto mp = most_perfect_magic_square(4);
    auto r = run_sbds(mp.csp, mp.group.generators(), BranchSpec{});
    REQUIRE(r.outcome == Outcome::Solution);
    CHECK(satisfies(mp.csp, *r.solution));
}

TEST_CASE("log lines")
{
    CHECK(log_header() == "restart\tsymmetry\tbacktracks\toutcome");
    CHECK(format_log_entry({3, "rot90", 1000, Outcome::CutoffReached}) == "3\trot90\t1000\tcutoff");
}
