#include <algorithm>

#include "doctest.h"
#include "symbreak/csp.hpp"
#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"

using namespace symbreak;

TEST_CASE("domains")
{
    Domain d = Domain::range(2, 7);
    CHECK(d.size() == 6);
    CHECK(d.remove(2));
    CHECK(d.min() == 3);
    CHECK_FALSE(d.remove(2));
    CHECK(d.restrict_to(4, 5));
    CHECK(d.size() == 2);
    CHECK(d.max() == 5);
    CHECK(d.assign(5));
    CHECK(d.fixed());
    CHECK(d.value() == 5);
    d.remove(5);
    CHECK(d.empty());
    CHECK_THROWS(Domain::range(0, Domain::kCapacity));
}

TEST_CASE("value offsets round-trip")
{
    Csp csp(3, 9, 1);
    const std::vector<int> values{1, 5, 9};
    const Assignment a = csp.from_values(values);
    CHECK(a == Assignment{0, 4, 8});
    CHECK(csp.to_values(a) == values);
    CHECK(csp.var(1).value_of(a[1]) == 5);
    CHECK_THROWS(csp.from_values(std::vector<int>{0, 1, 2}));
}

TEST_CASE("posting checks variable ranges")
{
    Csp csp(2, 3);
    CHECK_THROWS(csp.post(less(View::of(0), View::of(2))));
    CHECK_NOTHROW(csp.post(less(View::of(0), View::of(1))));
}

TEST_CASE("solution sets")
{
    CHECK(sol(magic_square(3).csp).size() == 8);

    Csp toy(2, 3);
    toy.post(less(toy.var(0), toy.var(1)));
    toy.post(less(toy.var(1), toy.var(0)));
    CHECK(sol(toy).empty());

    Csp one(1, 2, 1);
    CHECK(sol(one).size() == 2);
}

TEST_CASE("solution sets do not depend on constraint order")
{
    const Csp csp = magic_square(3).csp;
    Csp reversed(csp.var_count(), csp.value_count(), csp.value_offset());
    auto cs = csp.constraints();
    std::reverse(cs.begin(), cs.end());
    reversed.post_all(cs);
    CHECK(sol(reversed) == sol(csp));
}

TEST_CASE("objective values")
{
    Objective distinct{Objective::Kind::Distinct, {View::of(0, 1), View::of(1, 1), View::of(2, 1)}};
    CHECK(objective_value(distinct, std::vector<int>{0, 2, 0}) == 2);
    Objective mx{Objective::Kind::Max, distinct.views};
    CHECK(objective_value(mx, std::vector<int>{0, 2, 0}) == 3);
}
