#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

using namespace singtaut;
using namespace singtaut::test;

namespace {

bool anti_ample(const DualGraph& g, const CycleVec& z) {
    for (Int v : intersect_all(intersection_matrix(g), z))
        if (v >= 0) return false;
    return true;
}

Int tau_of(const DualGraph& g, const std::vector<std::size_t>& seq) {
    const auto m = intersection_matrix(g);
    CycleVec cur(g.size(), 0);
    Int tau = 0;
    bool first = true;
    for (auto i : seq) {
        const Int v = intersect_all(m, cur)[i];
        tau = first ? v : std::max(tau, v);
        first = false;
        ++cur[i];
    }
    return tau;
}

}  // namespace

TEST_CASE("anti_ample_cycle on A2") {
    const auto g = chain_graph({2, 2});
    CHECK(anti_ample_seed(g) == CycleVec{1, 1});
    CHECK(anti_ample_cycle(g, 3) == CycleVec{1, 1});
    CHECK(anti_ample_cycle(g, 2) == CycleVec{1, 1});
    CHECK(intersect_all(intersection_matrix(g), {1, 1}) == std::vector<Int>{-1, -1});
}

TEST_CASE("anti_ample_cycle is anti-ample and prime to p") {
    const std::vector<DualGraph> graphs{e8_graph(), dtilde_graph(), chain_graph({2, 3, 2}),
                                        star_graph(2, {{2}, {2, 2}, {3}}), star_graph(3, {{3}, {3}, {3}})};
    for (const auto& g : graphs)
        for (Int p : {2, 3, 5, 7, 11}) {
            const auto z = anti_ample_cycle(g, p);
            CHECK(anti_ample(g, z));
            for (Int c : z) {
                CHECK(c > 0);
                CHECK(c % p != 0);
            }
        }
}

TEST_CASE("computation_sequence") {
    const auto a2 = chain_graph({2, 2});
    CHECK(computation_sequence(a2, {1, 1}) == std::vector<std::size_t>{0, 1});
    CHECK(computation_sequence(chain_graph({2}), {1}) == std::vector<std::size_t>{0});

    const auto g = e8_graph();
    const auto zt = anti_ample_cycle(g, 7);
    const auto seq = computation_sequence(g, zt);
    CycleVec cur(g.size(), 0);
    for (auto i : seq) {
        ++cur[i];
        for (std::size_t j = 0; j < g.size(); ++j) CHECK(cur[j] <= zt[j]);
    }
    CHECK(cur == zt);
}

TEST_CASE("significant_multiplicity on A2") {
    const auto g = chain_graph({2, 2});
    const auto md = significant_multiplicity(g, 3, {1, 1}, {0, 1});
    CHECK(md.tau == 1);
    CHECK(md.lambda_weight == 0);
    CHECK(md.nu == 2);
    CHECK(md.z == CycleVec{2, 2});
    CHECK(validate_multiplicity(g, 3, md).empty());

    const auto md2 = significant_multiplicity(g, 2, {1, 1}, {0, 1});
    CHECK(md2.nu == 3);
    CHECK(md2.z == CycleVec{3, 3});
}

TEST_CASE("lambda weight follows the largest b") {
    const auto g = chain_graph({2, 5, 3});
    const auto md = multiplicity_data(g, 7);
    CHECK(md.lambda_weight == 3);
}

TEST_CASE("single curve has tau below one") {
    CHECK_THROWS_AS(significant_multiplicity(chain_graph({2}), 3, {1}, {0}), Error);
}

TEST_CASE("fill-ratio sequence beats random sequences") {
    const auto g = e8_graph();
    const auto zt = anti_ample_cycle(g, 7);
    const Int tau = tau_of(g, computation_sequence(g, zt));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::size_t> seq;
        for (std::size_t i = 0; i < g.size(); ++i) seq.insert(seq.end(), static_cast<std::size_t>(zt[i]), i);
        std::shuffle(seq.begin(), seq.end(), rng);
        CHECK(tau <= tau_of(g, seq));
    }
}

TEST_CASE("E8 multiplicity data at p = 7") {
    const auto g = e8_graph();
    const auto md = multiplicity_data(g, 7);
    CHECK(md.tau == 2);
    CHECK(md.lambda_weight == 0);
    CHECK(md.nu == 3);
    CHECK(md.z == CycleVec{615, 1206, 1776, 2325, 2853, 1923, 972, 1437});
    CHECK(validate_multiplicity(g, 7, md).empty());
}

TEST_CASE("override cycle") {
    const auto g = dtilde_graph();
    const auto md = multiplicity_data(g, 3, parse_cycle(g, "E1=7,E2=5,E3=7,E4=4,E5=4,E6=4,E7=4"));
    CHECK(md.nu == 4);
    CHECK(md.z == CycleVec{28, 20, 28, 16, 16, 16, 16});
    CHECK(named_cycle(g, md.z).at("E2") == 20);
    CHECK_THROWS_AS(multiplicity_data(g, 3, CycleVec{1, 1, 1, 1, 1, 1, 1}), Error);
    CHECK_THROWS_AS(parse_cycle(g, "E1=7"), Error);
    CHECK_THROWS_AS(parse_cycle(g, "E1=7,E1=7"), Error);
}

TEST_CASE("validate_multiplicity flags a non-minimal nu") {
    const auto g = chain_graph({2, 2});
    auto md = significant_multiplicity(g, 3, {1, 1}, {0, 1});
    md.nu = 4;
    md.z = {4, 4};
    CHECK_FALSE(validate_multiplicity(g, 3, md).empty());
}
