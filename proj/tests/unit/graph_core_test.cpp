#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace singtaut;
using namespace singtaut::test;

namespace {

// Determinant of the tridiagonal matrix with diagonal bs and off-diagonal -1.
Int tridiagonal_det(const std::vector<Int>& bs, std::size_t from) {
    Int prev = 0, cur = 1;
    for (std::size_t i = bs.size(); i-- > from;) {
        const Int next = bs[i] * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Int gcd_abs(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

TEST_CASE("parse_graph reads vertices, edges and defaults") {
    const auto g = parse_graph("vertex a b=2\nvertex c b=2\nedge a c\n");
    CHECK(g.size() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.vertex(0).genus == 0);
    CHECK(std::holds_alternative<ChainShape>(classify_shape(g)));

    const auto h = parse_graph("# comment\nvertex a b=3 genus=1\n");
    CHECK(h.vertex(0).b == 3);
    CHECK(h.vertex(0).genus == 1);
}

TEST_CASE("parse_graph accepts a loop that shape classification rejects") {
    const auto g = parse_graph("vertex a b=4\nedge a a\n");
    CHECK(g.has_loop_edge());
    CHECK(std::holds_alternative<OtherShape>(classify_shape(g)));
    CHECK(intersection_matrix(g)[0][0] == -2);
}

TEST_CASE("parse_graph reports positions") {
    CHECK_THROWS_AS(parse_graph("vertex a b=2\nedge a z\n"), ParseError);
    try {
        parse_graph("vertex a b=2\nvertex a b=3\n");
        FAIL("duplicate id accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("vertex a b=x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertx a b=2\n"), ParseError);
}

TEST_CASE("format_graph round-trips") {
    const auto g = e8_graph();
    const auto h = parse_graph(format_graph(g));
    CHECK(h.vertices() == g.vertices());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("intersection_matrix") {
    CHECK(intersection_matrix(chain_graph({2})) == IntMatrix{{-2}});
    CHECK(intersection_matrix(chain_graph({2, 2})) == IntMatrix{{-2, 1}, {1, -2}});
    const auto g = parse_graph("vertex a b=3\nvertex c b=3\nedge a c\nedge c a\n");
    CHECK(intersection_matrix(g)[0][1] == 2);
    CHECK(intersection_matrix(g)[1][0] == 2);
    CHECK(g.edge_multiplicity(0, 1) == 2);
    CHECK_FALSE(g.is_tree());
}

TEST_CASE("determinant and negative definiteness") {
    CHECK(determinant({{-2}}) == -2);
    CHECK(determinant({{-2, 1}, {1, -2}}) == 3);
    CHECK(determinant(intersection_matrix(e8_graph())) == 1);
    CHECK(is_negative_definite({{-2}}));
    CHECK(is_negative_definite(intersection_matrix(chain_graph({2, 2}))));
    CHECK(is_negative_definite(intersection_matrix(e8_graph())));
    CHECK_FALSE(is_negative_definite(intersection_matrix(star_graph(2, {{2}, {2}, {2}, {2}}))));
    CHECK_FALSE(is_negative_definite({{-1, 1}, {1, -1}}));
}

TEST_CASE("classify_shape") {
    CHECK(std::holds_alternative<EmptyShape>(classify_shape(DualGraph{})));
    const auto a5 = classify_shape(chain_graph({2, 2, 2, 2, 2}));
    REQUIRE(std::holds_alternative<ChainShape>(a5));
    CHECK(std::get<ChainShape>(a5).order.size() == 5);

    const auto e8 = classify_shape(e8_graph());
    REQUIRE(std::holds_alternative<StarShape>(e8));
    CHECK(star_of(e8).type_tuple == std::vector<Int>{2, 3, 5});
    CHECK(star_of(e8).center_id == "a5");

    const auto dt = classify_shape(dtilde_graph());
    REQUIRE(std::holds_alternative<OtherShape>(dt));
    CHECK(std::get<OtherShape>(dt).reason == "two centers");

    DualGraph split;
    split.add_vertex({"a", 0, 2});
    split.add_vertex({"b", 0, 2});
    CHECK_THROWS_AS(classify_shape(split), Error);
}

TEST_CASE("branch_fraction examples") {
    CHECK(branch_fraction({2}) == std::pair<Int, Int>{2, 1});
    CHECK(branch_fraction({2, 2}) == std::pair<Int, Int>{3, 2});
    CHECK(branch_fraction({3, 2}) == std::pair<Int, Int>{5, 2});
    CHECK(branch_fraction({2, 2, 2, 2}) == std::pair<Int, Int>{5, 4});
    CHECK_THROWS_AS(branch_fraction({2, 1, 1}), Error);
}

TEST_CASE("branch_fraction agrees with tridiagonal determinants") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> b(2, 6), len(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Int> bs(static_cast<std::size_t>(len(rng)));
        for (auto& x : bs) x = b(rng);
        const auto [alpha, beta] = branch_fraction(bs);
        const Int num = tridiagonal_det(bs, 0);
        const Int den = bs.size() == 1 ? 1 : tridiagonal_det(bs, 1);
        CHECK(alpha == num);
        CHECK(beta == den);
        CHECK(gcd_abs(alpha, beta) == 1);
    }
}

TEST_CASE("is_potentially_taut") {
    CHECK(is_potentially_taut(e8_graph()));
    CHECK_FALSE(is_potentially_taut(parse_graph("vertex a b=2 genus=1\n")));
    CHECK_FALSE(is_potentially_taut(star_graph(3, {{2}, {2}, {2}, {2}})));
}

TEST_CASE("fundamental_cycle") {
    CHECK(fundamental_cycle(chain_graph({2, 2, 2, 2})) == CycleVec{1, 1, 1, 1});
    CHECK(fundamental_cycle(chain_graph({3, 2, 5})) == CycleVec{1, 1, 1});
    CHECK(fundamental_cycle(chain_graph({2})) == CycleVec{1});
    const auto g = e8_graph();
    const auto z = fundamental_cycle(g);
    CHECK(z == CycleVec{2, 3, 4, 5, 6, 4, 2, 3});
    for (Int v : intersect_all(intersection_matrix(g), z)) CHECK(v <= 0);
    CHECK_THROWS_AS(fundamental_cycle(star_graph(2, {{2}, {2}, {2}, {2}})), Error);
}

TEST_CASE("is_rational_graph") {
    CHECK(is_rational_graph(e8_graph()));
    CHECK(is_rational_graph(chain_graph({2, 2, 2})));
    CHECK(is_rational_graph(star_graph(2, {{2}, {2}, {2, 2, 2}})));
    CHECK(is_rational_graph(star_graph(2, {{2}, {2, 2}, {2, 2}})));
    CHECK(is_rational_graph(chain_graph({5, 3, 7, 2})));
    CHECK_FALSE(is_rational_graph(parse_graph("vertex a b=2 genus=1\n")));
    const auto g = chain_graph({3});
    CHECK(arithmetic_genus(g, {1}) == 0);
}
