#include "doctest.h"
#include "symbreak/models.hpp"
#include "symbreak/serialize.hpp"

using namespace symbreak;

TEST_CASE("symmetries round-trip through JSON")
{
    const Symmetry g = compose(value_inversion(4), square_symmetry(4, 16, "flipv"));
    const std::string text = symmetry_to_json(g, 1);
    CHECK(text.find("\"offset\":1") != std::string::npos);
    const Symmetry h = symmetry_from_json(text);
    CHECK(h == g);
    CHECK(h.label == g.label);
    CHECK_THROWS(symmetry_from_json("{\"var\":[0,0],\"val\":[0]}"));
}

TEST_CASE("groups round-trip through JSON")
{
    auto mp = most_perfect_magic_square(4);
    const SymmetryGroup back = group_from_json(generators_to_json(mp.group, mp.csp.value_offset()));
    CHECK(back.generators() == mp.group.generators());
    CHECK(enumerate_group(back).size() == 16);
}
