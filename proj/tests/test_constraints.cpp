#include "doctest.h"
#include "support.hpp"
#include "symbreak/csp.hpp"
#include "symbreak/models.hpp"
#include "tuple_oracle.hpp"

using namespace symbreak;

TEST_CASE("eval on the running example")
{
    auto mp = most_perfect_magic_square(4);
    const Csp& csp = mp.csp;
    const View x1n = csp.var(square_cell(4, 1, 4));
    const View xn1 = csp.var(square_cell(4, 4, 1));
    const Constraint c = less(x1n, xn1);
    const auto a2 = test::square(csp, 2);
    CHECK(eval(c, a2));
    CHECK_FALSE(eval(c, apply_assignment(square_symmetry(4, 16, "diag"), a2)));

    const auto s = mp.sbc.constraints;
    CHECK(satisfies(test::square(csp, 3), s));
    CHECK_FALSE(satisfies(test::square(csp, 2), s.back()));
    CHECK(satisfies(test::square(csp, 1), std::span<const Constraint>{}));
}

TEST_CASE("trivial evaluations")
{
    std::vector<int> a{0, 2, 1, 0, 2, 1};
    std::vector<View> row1{View::of(0), View::of(1), View::of(2)};
    std::vector<View> row2{View::of(3), View::of(4), View::of(5)};
    CHECK(eval(lex_le(row1, row1), a));
    CHECK_FALSE(eval(lex_less(row1, row1), a));
    CHECK(eval(hamming_eq(row1, row2, 0), a));
    CHECK_FALSE(eval(hamming_eq(row1, row2, 1), a));
    CHECK(eval(occurrence(row1, 2, 1), a));
    CHECK(eval(precedence(row1, {0, 1, 2}), a) == false);
    CHECK(eval(precedence({View::of(0), View::of(2), View::of(1)}, {0, 1, 2}), a));
}

TEST_CASE("views")
{
    const View v = View::of(0, 1);
    CHECK(v.value_of(3) == 4);
    const View r = reflect(v, 17);
    CHECK(r.value_of(3) == 13);
    CHECK(r.index_of(13, 16) == 3);
    CHECK(reflect(r, 17) == v);
    CHECK(offset_by(v, 2).value_of(0) == 3);
    const Permutation p({1, 2, 0});
    const View t = compose_table(View::of(0), p);
    for (int x = 0; x < 3; ++x)
        CHECK(t.value_of(x) == p[x]);
    CHECK(compose_table(t, p.inverse()).is_plain());
    // Reversing the index order is an affine map.
    const View rev = compose_table(View::of(0, 1), Permutation({3, 2, 1, 0}));
    CHECK_FALSE(rev.has_table());
    CHECK(rev.value_of(0) == 4);
}

TEST_CASE("bounds of a strict inequality")
{
    std::vector<Domain> d{Domain::range(3, 9), Domain::range(1, 5)};
    REQUIRE(propagate(less(View::of(0), View::of(1)), d) == PropStatus::Ok);
    CHECK(d[0] == Domain::range(3, 4));
    CHECK(d[1] == Domain::range(4, 5));
}

TEST_CASE("all-different removes fixed values")
{
    std::vector<Domain> d{Domain::singleton(5), Domain::range(4, 6)};
    REQUIRE(propagate(all_different({View::of(0), View::of(1)}), d) == PropStatus::Ok);
    Domain expect = Domain::range(4, 6);
    expect.remove(5);
    CHECK(d[1] == expect);
}

TEST_CASE("implication propagates only once the guard holds")
{
    auto g = linear_eq({View::of(0), View::of(1)}, {1, 1}, 3);
    auto c = implies(g, less(View::of(0), View::of(1)));
    std::vector<Domain> open{Domain::range(0, 3), Domain::range(0, 3)};
    REQUIRE(propagate(c, open) == PropStatus::Ok);
    CHECK(open[0] == Domain::range(0, 3));
    std::vector<Domain> fixedGuard{Domain::singleton(2), Domain::singleton(1)};
    CHECK(propagate(c, fixedGuard) == PropStatus::Fail);
    // Body impossible: the guard must be false.
    std::vector<Domain> body{Domain::singleton(3), Domain::range(0, 1)};
    REQUIRE(propagate(c, body) == PropStatus::Ok);
    CHECK(body[1] == Domain::singleton(1));
}

TEST_CASE("every propagator keeps every supported value")
{
    for (const auto& [c, arity] : test::constraint_catalog()) {
        INFO(c.kind_name() << " arity " << arity);
        const auto tally = test::tuple_oracle(c, arity, 4);
        CHECK(tally.configurations > 0);
        INFO(tally.firstViolation);
        CHECK(tally.violations == 0);
    }
}

TEST_CASE("satisfies agrees with eval and domains")
{
    Csp csp(2, 3, 1);
    csp.post(less(csp.var(0), csp.var(1)));
    CHECK(satisfies(csp, std::vector<int>{0, 2}));
    CHECK_FALSE(satisfies(csp, std::vector<int>{2, 0}));
    csp.restrict_domain(0, 2, 3);
    CHECK_FALSE(satisfies(csp, std::vector<int>{0, 2}));
}
