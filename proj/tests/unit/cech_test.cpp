#include <doctest.h>

#include "acceptance.hpp"
#include "test_support.hpp"

using namespace singtaut;
using namespace singtaut::test;

namespace {

const CycleVec kDTildeCycle{7, 5, 7, 4, 4, 4, 4};

}  // namespace

TEST_CASE("chains have no first cohomology") {
    const auto a3 = cech_h1_rank(chain_graph({2, 2, 2}), 2);
    CHECK(a3.model == CechModel::Chain);
    CHECK(a3.rank == 0);
    CHECK(a3.stable);
    for (Int p : {3, 5})
        for (const auto& bs : std::vector<std::vector<Int>>{{2, 3}, {3, 2, 4}, {2, 2, 2, 2}}) {
            const auto c = cech_h1_rank(chain_graph(bs), p, 32, 8);
            CHECK(c.rank == 0);
            CHECK(c.stable);
        }
}

TEST_CASE("E8 at p = 7 has no first cohomology") {
    const auto c = cech_h1_rank(e8_graph(), 7, 64, 8);
    CHECK(c.model == CechModel::Star);
    CHECK(c.rank == 0);
    CHECK(c.rank_doubled == 0);
    CHECK(c.stable);
    CHECK(c.slices == 2853);
}

TEST_CASE("D-tilde at p = 3 has a stable class") {
    const auto c = cech_h1_rank(dtilde_graph(), 3, 32, 8, kDTildeCycle);
    CHECK(c.model == CechModel::DTilde);
    CHECK(c.rank >= 1);
    CHECK(c.stable);
}

TEST_CASE("certified taut stars have vanishing Cech rank") {
    const auto corpus = f_regular_star_corpus();
    int checked = 0;
    for (const auto& cg : corpus) {
        if (checked == 20) break;
        for (Int p : {5, 7, 11, 3, 2}) {
            if (!hara_f_regular(cg.graph, p)) continue;
            const auto v = taut_certificate(cg.graph, p);
            if (v.kind != VerdictKind::Taut || v.slices > 300) continue;
            const auto c = cech_h1_rank(cg.graph, p);
            INFO(cg.name << " p=" << p);
            CHECK(c.rank == 0);
            CHECK(c.stable);
            ++checked;
            break;
        }
    }
    CHECK(checked == 20);
}

TEST_CASE("unsupported inputs") {
    CHECK_THROWS_AS(cech_h1_rank(star_graph(3, {{2}, {2}, {2}, {2}}), 5), Error);
    CHECK_THROWS_AS(cech_h1_rank(e8_graph(), 7, 1, 8), Error);
    CHECK_THROWS_AS(cech_h1_rank(e8_graph(), 7, 64, 1), Error);
}
