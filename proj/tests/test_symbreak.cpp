#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"
#include "symbreak/symbreak.hpp"
#include "tuple_oracle.hpp"

using namespace symbreak;

namespace {

std::vector<std::vector<int>> all_assignments(int vars, int values)
{
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(vars), 0);
    while (true) {
        out.push_back(a);
        int k = 0;
        while (k < vars && ++a[static_cast<std::size_t>(k)] == values)
            a[static_cast<std::size_t>(k++)] = 0;
        if (k == vars)
            return out;
    }
}

Symmetry random_symmetry(std::mt19937_64& rng, int vars, int values)
{
    std::vector<int> v(static_cast<std::size_t>(vars)), w(static_cast<std::size_t>(values));
    for (int i = 0; i < vars; ++i)
        v[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < values; ++i)
        w[static_cast<std::size_t>(i)] = i;
    shuffle(v, rng);
    shuffle(w, rng);
    return {Permutation(v), Permutation(w), {}};
}

} // namespace

TEST_CASE("reflecting the corner constraints")
{
    auto mp = most_perfect_magic_square(4);
    const Csp& csp = mp.csp;
    auto X = [&](int i, int j) { return csp.var(square_cell(4, i, j)); };
    const SymBreakSet s = corner_constraints(csp, 4);
    const Symmetry flipv = square_symmetry(4, 16, "flipv");

    const SymBreakSet image = apply_symmetry(flipv, s);
    REQUIRE(image.constraints.size() == 2);
    CHECK(image.constraints[0] == less_than_min(X(4, 1), {X(4, 4), X(1, 1), X(1, 4)}));
    CHECK(image.constraints[1] == less(X(4, 4), X(1, 1)));
    CHECK(image.label == "flipv(S)");

    const SymBreakSet same = apply_symmetry(Symmetry::identity(16, 16), s);
    CHECK(same.constraints == s.constraints);

    const SymBreakSet both = simplify(apply_symmetry(compose(value_inversion(4), flipv), s));
    REQUIRE(both.constraints.size() == 2);
    CHECK(both.constraints[0] == greater_than_max(X(4, 1), {X(4, 4), X(1, 1), X(1, 4)}));
    CHECK(both.constraints[1] == less(X(1, 1), X(4, 4)));
    CHECK(format_constraint(both.constraints[0], csp.var_names()) == "X[4,1] > max(X[4,4], X[1,1], X[1,4])");
}

TEST_CASE("simplify cancels reflections")
{
    const View x = View::of(0, 1), y = View::of(1, 1);
    const Constraint c = less(reflect(x, 17), reflect(y, 17));
    CHECK(simplify(c) == less(y, x));
    const Constraint plain = less(x, y);
    CHECK(simplify(plain) == plain);
    const Constraint m = less_than_min(reflect(x, 17), {reflect(y, 17), reflect(View::of(2, 1), 17)});
    CHECK(simplify(m) == greater_than_max(x, {y, View::of(2, 1)}));
}

TEST_CASE("simplify preserves meaning")
{
    const auto space = all_assignments(4, 4);
    std::mt19937_64 rng(3);
    for (const auto& [c, arity] : test::constraint_catalog()) {
        for (int round = 0; round < 4; ++round) {
            // Wrap with a random value permutation, which yields reflections when it reverses.
            Symmetry g = random_symmetry(rng, 4, 4);
            if (round % 2 == 0)
                g.val = Permutation({3, 2, 1, 0});
            const Constraint wrapped = apply_symmetry(g, c);
            const Constraint simple = simplify(wrapped);
            for (const auto& a : space)
                REQUIRE(eval(simple, a) == eval(wrapped, a));
        }
    }
}

TEST_CASE("the image of a constraint has the image of its solutions")
{
    const auto space = all_assignments(4, 4);
    std::mt19937_64 rng(8);
    for (const auto& [c, arity] : test::constraint_catalog()) {
        for (int round = 0; round < 6; ++round) {
            const Symmetry g = random_symmetry(rng, 4, 4);
            const Constraint image = apply_symmetry(g, c);
            for (const auto& a : space)
                REQUIRE(eval(c, a) == eval(image, apply_assignment(g, a)));
        }
    }
}

TEST_CASE("classification of the diagonal constraint and the conditional constraint")
{
    auto mp = most_perfect_magic_square(4);
    const Csp& csp = mp.csp;
    auto X = [&](int i, int j) { return csp.var(square_cell(4, i, j)); };
    const SymBreakSet nine{{less(X(1, 4), X(4, 1))}, "S"};
    CHECK(classify(csp, nine, square_symmetry(4, 16, "diag")) == Classification::Eliminates);
    CHECK(classify(csp, nine, square_symmetry(4, 16, "rot90")) == Classification::BreaksNotEliminates);

    const SymBreakSet cond{{implies(sum_eq({X(1, 1), X(4, 4)}, 17), less(X(1, 1), X(4, 4)))}, "S"};
    for (const auto& g : square_symmetries(4, 16))
        CHECK(classify(csp, cond, g) == Classification::DoesNotBreak);
    CHECK(std::string(to_string(Classification::BreaksNotEliminates)) == "breaks-not-eliminates");
}

TEST_CASE("classification from a precomputed survivor set")
{
    // X0 < X1 over {0,1,2}: swapping the variables eliminates, the identity does not break.
    Csp csp(2, 3);
    const SymBreakSet s{{less(View::of(0), View::of(1))}, "S"};
    const auto surv = enumerate_solutions(with_constraints(csp, s));
    CHECK(surv.size() == 3);
    CHECK(classify(surv, s, Symmetry{Permutation({1, 0}), Permutation::identity(3), {}}) == Classification::Eliminates);
    CHECK(classify(surv, s, Symmetry::identity(2, 3)) == Classification::DoesNotBreak);
    // Value reversal maps (0,1) to (2,1), which fails, and (0,2) to (2,0), which fails too.
    CHECK(classify(surv, s, Symmetry{Permutation::identity(2), Permutation({2, 1, 0}), {}}) == Classification::Eliminates);
}

TEST_CASE("printing")
{
    auto mp = most_perfect_magic_square(4);
    const auto& names = mp.csp.var_names();
    CHECK(format_constraint(mp.sbc.constraints[0], names) == "X[1,1] < min(X[1,4], X[4,1], X[4,4])");
    CHECK(format_constraint(mp.sbc.constraints[1], names) == "X[1,4] < X[4,1]");
    CHECK(format_constraint(mp.sbc.constraints[2], names) == "X[1,1] < 17 - max(X[1,1], X[1,4], X[4,1], X[4,4])");
}
