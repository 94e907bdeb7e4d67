#include <doctest.h>

#include "test_support.hpp"

using namespace singtaut;
using namespace singtaut::test;

namespace {

MultiplicityData dtilde_data(Int p) {
    const auto g = dtilde_graph();
    if (p == 3) return multiplicity_data(g, p, CycleVec{7, 5, 7, 4, 4, 4, 4});
    return multiplicity_data(g, p);
}

}  // namespace

TEST_CASE("exponent matrix of the D-tilde chain") {
    const auto g = dtilde_graph();
    const auto d = recognize_dtilde(g);
    REQUIRE(d.has_value());
    const auto m = dtilde_exponent_matrix(g, *d);
    CHECK(m == Matrix2{{{-5, -3}, {8, 5}}});
    CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] == -1);
}

TEST_CASE("obstruction at p = 3") {
    const auto md = dtilde_data(3);
    CHECK(md.nu == 4);
    const auto ob = dtilde_obstruction(dtilde_graph(), 3, md);
    REQUIRE(ob.has_value());
    CHECK(ob->holds);
    CHECK(ob->target_value == 1);
    CHECK(ob->direction_matrix[1][0] % 3 == 0);
    CHECK_FALSE(ob->audits.empty());
    for (const auto& a : ob->audits) {
        INFO(a.family);
        CHECK(a.nonzero == 0);
        CHECK(a.generators > 0);
    }
}

TEST_CASE("no obstruction at p = 7") {
    CHECK_FALSE(dtilde_obstruction(dtilde_graph(), 7, dtilde_data(7)).has_value());
}

TEST_CASE("non D-tilde input") {
    const auto g = e8_graph();
    CHECK_THROWS_AS(dtilde_obstruction(g, 7, multiplicity_data(g, 7)), Error);
}
