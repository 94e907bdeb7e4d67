#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "test_support.hpp"

using namespace singtaut;
using namespace singtaut::test;

namespace {

// Coefficient of x^m in (x+1)^m (x-lambda)^m by direct polynomial expansion.
Int middle_coefficient(Int lambda, Int p) {
    const Int m = (p - 1) / 2;
    Fp f(p);
    std::vector<Int> poly{1};
    auto times = [&](Int c0) {
        std::vector<Int> out(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out[i + 1] = f.add(out[i + 1], poly[i]);
            out[i] = f.add(out[i], f.mul(poly[i], c0));
        }
        poly = out;
    };
    for (Int i = 0; i < m; ++i) times(1);
    for (Int i = 0; i < m; ++i) times(f.norm(-lambda));
    return poly[static_cast<std::size_t>(m)];
}

// Orbits of lambda under the involutions lambda -> 1/lambda and lambda -> -1-lambda,
// restricted to values passing the Hasse condition.
std::set<std::set<Int>> orbit_oracle(Int p) {
    Fp f(p);
    std::map<Int, Int> parent;
    std::function<Int(Int)> find = [&](Int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (Int l = 1; l < p - 1; ++l) parent[l] = l;
    for (Int l = 1; l < p - 1; ++l)
        for (Int img : {f.inv(l), f.norm(-1 - l)}) parent[find(l)] = find(img);
    std::map<Int, std::set<Int>> groups;
    for (Int l = 1; l < p - 1; ++l)
        if (middle_coefficient(l, p) != 0) groups[find(l)].insert(l);
    std::set<std::set<Int>> out;
    for (auto& [root, members] : groups) out.insert(members);
    return out;
}

DualGraph star2222() { return star_graph(3, {{2}, {2}, {2}, {2}}); }

}  // namespace

TEST_CASE("CrossRatio rejects 0 and -1") {
    CHECK_THROWS_AS(CrossRatio(0, 5), Error);
    CHECK_THROWS_AS(CrossRatio(4, 5), Error);
    CHECK_THROWS_AS(CrossRatio(-1, 7), Error);
    CHECK(CrossRatio(7, 5).value() == 2);
}

TEST_CASE("hara_f_regular") {
    CHECK(hara_f_regular(e8_graph(), 7));
    CHECK_FALSE(hara_f_regular(e8_graph(), 5));
    CHECK_FALSE(hara_f_regular(e8_graph(), 2));
    CHECK(hara_f_regular(chain_graph({2, 3, 4}), 2));
    CHECK(hara_f_regular(star_graph(2, {{2}, {2}, {2, 2, 2, 2}}), 3));
    CHECK_FALSE(hara_f_regular(star_graph(2, {{2}, {2}, {2, 2, 2, 2}}), 2));
    CHECK_THROWS_AS(hara_f_regular(e8_graph(), 6), Error);
}

TEST_CASE("condition_star") {
    CHECK_FALSE(condition_star(CrossRatio(1, 3), 3));
    CHECK(condition_star(CrossRatio(1, 5), 5));
    CHECK(hasse_sum(1, 5) == 3);
    CHECK(hasse_sum(2, 3) == 2);
    CHECK_THROWS_AS(condition_star(CrossRatio(1, 5), 2), Error);
}

TEST_CASE("hasse_sum matches the middle coefficient") {
    for (Int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        for (Int l = 0; l < p; ++l) CHECK(hasse_sum(l, p) == middle_coefficient(l, p));
}

TEST_CASE("hara_f_pure") {
    const auto e8 = hara_f_pure(e8_graph(), 7);
    CHECK(e8.kind == FKind::FRegular);

    const auto rdp = hara_f_pure(e8_graph(), 5);
    CHECK(rdp.kind == FKind::RDPEquationDependent);
    CHECK(rdp.family == "E8");
    CHECK(rdp.allowed_p == std::vector<Int>{2, 3, 5});

    const auto t244 = star_graph(3, {{2}, {2, 2, 2}, {2, 2, 2}});
    const auto c244 = hara_f_pure(t244, 5);
    CHECK(c244.kind == FKind::FPureNonRDP);
    CHECK(c244.pure_case == PureCase::Type244);
    CHECK(hara_f_pure(t244, 7).kind == FKind::NotFPure);

    const auto t236 = star_graph(3, {{2}, {2, 2}, {2, 2, 2, 2, 2}});
    CHECK(hara_f_pure(t236, 5).kind == FKind::NotFPure);
    CHECK(hara_f_pure(t236, 7).pure_case == PureCase::Type236);

    const auto t333 = star_graph(3, {{2, 2}, {2, 2}, {2, 2}});
    CHECK(hara_f_pure(t333, 7).pure_case == PureCase::Type333);
    CHECK(hara_f_pure(t333, 5).kind == FKind::NotFPure);

    CHECK_THROWS_AS(hara_f_pure(star2222(), 5), Error);
    const auto with_lambda = hara_f_pure(star2222(), 5, CrossRatio(1, 5));
    CHECK(with_lambda.pure_case == PureCase::Type2222);
    CHECK(with_lambda.lambda == 1);
    CHECK(hara_f_pure(star2222(), 3, CrossRatio(1, 3)).kind == FKind::NotFPure);

    const auto dt = hara_f_pure(dtilde_graph(), 3);
    CHECK(dt.pure_case == PureCase::DTilde);
    CHECK(dt.kind == FKind::FPureNonRDP);
}

TEST_CASE("F-regular implies FRegular classification") {
    const std::vector<DualGraph> graphs{e8_graph(), chain_graph({2, 3}), star_graph(2, {{2}, {2}, {3, 2}}),
                                        star_graph(2, {{2}, {2, 2}, {2, 2}}), star_graph(3, {{3}, {2, 2}, {4}})};
    for (const auto& g : graphs)
        for (Int p : {2, 3, 5, 7, 11})
            if (hara_f_regular(g, p)) CHECK(hara_f_pure(g, p).kind == FKind::FRegular);
}

TEST_CASE("recognize_ade") {
    CHECK(recognize_ade(e8_graph()) == "E8");
    CHECK(recognize_ade(chain_graph({2, 2, 2})) == "A3");
    CHECK(recognize_ade(star_graph(2, {{2}, {2}, {2, 2}})) == "D5");
    CHECK(recognize_ade(star_graph(2, {{2}, {2, 2}, {2, 2}})) == "E6");
    CHECK_FALSE(recognize_ade(chain_graph({2, 3})).has_value());
}

TEST_CASE("recognize_dtilde") {
    const auto d = recognize_dtilde(dtilde_graph());
    REQUIRE(d.has_value());
    CHECK(d->n == 3);
    CHECK(d->chain == std::vector<std::size_t>{0, 1, 2});
    CHECK(d->left_leaves == std::vector<std::size_t>{3, 4});
    CHECK(d->right_leaves == std::vector<std::size_t>{5, 6});
    CHECK_FALSE(recognize_dtilde(e8_graph()).has_value());

    const auto three = parse_graph(
        "vertex c1 b=3\nvertex c2 b=3\nvertex l1 b=2\nvertex l2 b=2\nvertex l3 b=2\nvertex r1 b=2\nvertex r2 b=2\n"
        "edge c1 c2\nedge c1 l1\nedge c1 l2\nedge c1 l3\nedge c2 r1\nedge c2 r2\n");
    CHECK_FALSE(recognize_dtilde(three).has_value());
}

TEST_CASE("moduli_family_report") {
    CHECK(moduli_family_report(star2222(), 3).empty());
    CHECK_THROWS_AS(moduli_family_report(star2222(), 2), Error);
    CHECK_THROWS_AS(moduli_family_report(e8_graph(), 5), Error);
    for (Int p : {5, 7, 11, 13, 17}) {
        std::set<std::set<Int>> got;
        for (const auto& o : moduli_family_report(star2222(), p)) {
            CHECK(o.members.front() == o.representative);
            got.insert(std::set<Int>(o.members.begin(), o.members.end()));
        }
        CHECK(got == orbit_oracle(p));
    }
}

TEST_CASE("cross_ratio_orbit is closed") {
    for (Int p : {7, 11, 13})
        for (Int l = 1; l < p - 1; ++l) {
            const auto orbit = cross_ratio_orbit(l, p);
            for (Int v : orbit) CHECK(cross_ratio_orbit(v, p) == orbit);
        }
}
