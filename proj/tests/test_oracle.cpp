#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"
#include "symbreak/search.hpp"

using namespace symbreak;

TEST_CASE("oracle enumeration")
{
    auto m3 = magic_square(3);
    const auto sols = enumerate_solutions(m3.csp);
    CHECK(sols.size() == 8);
    CHECK(std::is_sorted(sols.begin(), sols.end()));
    auto searched = enumerate_all(m3.csp, {}).solutions;
    std::sort(searched.begin(), searched.end());
    CHECK(searched == sols);

    Csp one(1, 2, 1);
    CHECK(enumerate_solutions(one).size() == 2);
    CHECK(first_solution(one) == Assignment{0});

    CHECK_THROWS_AS(enumerate_solutions(most_perfect_magic_square(4).csp, 1000), SearchSpaceTooLarge);
}

TEST_CASE("orbit partitions")
{
    auto m3 = magic_square(3);
    const auto sols = enumerate_solutions(m3.csp);
    const auto orbits = orbit_partition(sols, m3.group);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size() == 8);

    const std::vector<Symmetry> idOnly{Symmetry::identity(9, 9)};
    CHECK(orbit_partition(sols, idOnly).size() == 8);

    auto mp = most_perfect_magic_square(4);
    const auto all = enumerate_solutions(mp.csp);
    const auto parts = orbit_partition(all, mp.group);
    auto shuffled = all;
    std::mt19937_64 rng(4);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(orbit_partition(shuffled, mp.group) == parts);

    std::size_t total = 0;
    for (const auto& o : parts)
        total += o.size();
    CHECK(total == all.size());

    const auto holder = std::find_if(parts.begin(), parts.end(), [&](const auto& o) {
        return std::find(o.begin(), o.end(), test::square(mp.csp, 1)) != o.end();
    });
    REQUIRE(holder != parts.end());
    for (int k = 2; k <= 4; ++k)
        CHECK(std::find(holder->begin(), holder->end(), test::square(mp.csp, k)) != holder->end());
}

TEST_CASE("the running example witnesses")
{
    auto mp = most_perfect_magic_square(4);
    const auto ctx = make_context(mp);
    CHECK(check_proposition(Proposition::Soundness, ctx).passed);
    CHECK(check_proposition(Proposition::Representatives, ctx).passed);
    const Symmetry flipv = square_symmetry(4, 16, "flipv");
    const std::vector<std::pair<Symmetry, int>> witnesses{
        {Symmetry::identity(16, 16), 3}, {flipv, 4}, {compose(value_inversion(4), flipv), 2}};
    for (const auto& [g, k] : witnesses) {
        const auto e = std::find(ctx.elements.begin(), ctx.elements.end(), g) - ctx.elements.begin();
        REQUIRE(e < static_cast<long>(ctx.elements.size()));
        const int idx = ctx.solution_index(test::square(mp.csp, k));
        REQUIRE(idx >= 0);
        const auto& surv = ctx.survivors[static_cast<std::size_t>(e)];
        CHECK(std::find(surv.begin(), surv.end(), idx) != surv.end());
    }
}

TEST_CASE("all checks pass on small bundles")
{
    for (const auto& b : {magic_square(3), efpa(2, 2, 1, 2), graph_coloring(6, 3, 2, 3)}) {
        INFO(b.name);
        const auto ctx = make_context(b);
        for (const auto& r : check_all(ctx)) {
            INFO(to_string(r.proposition));
            CHECK(r.passed);
        }
    }
}

TEST_CASE("a generator that is not a symmetry is caught")
{
    auto m3 = magic_square(3);
    SymmetryGroup bogus(9, 9);
    bogus.add_generator({Permutation({1, 0, 2, 3, 4, 5, 6, 7, 8}), Permutation::identity(9), "swap12"});
    const auto ctx = make_context("magic-3", m3.csp, bogus, m3.sbc);
    const auto r = check_proposition(Proposition::FixedSolutions, ctx);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->symmetry == "swap12");
    CHECK(satisfies(m3.csp, r.counterexample->assignment));
}

TEST_CASE("proposition names")
{
    for (auto p : kAllPropositions)
        CHECK(parse_proposition(to_string(p)) == p);
    CHECK_FALSE(parse_proposition("nonsense"));
}

TEST_CASE("report lines")
{
    const auto ctx = make_context(magic_square(3));
    const auto results = check_all(ctx);
    const std::string text = report(ctx, results);
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
    CHECK(text.find("soundness\tmagic-3\tgroup=8\tsolutions=8\torbits=1\tPASS") != std::string::npos);
}
