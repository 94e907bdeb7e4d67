#include <doctest.h>

#include "report.hpp"
#include "test_support.hpp"

using namespace singtaut;
using namespace singtaut::test;

namespace {

template <typename T>
T round_trip(const T& value) {
    return json::parse(json(value).dump()).template get<T>();
}

}  // namespace

TEST_CASE("classification and multiplicity data") {
    const auto c = hara_f_pure(e8_graph(), 5);
    CHECK(round_trip(c) == c);
    const auto l = hara_f_pure(star_graph(3, {{2}, {2}, {2}, {2}}), 5, CrossRatio(1, 5));
    CHECK(round_trip(l) == l);
    CHECK(json(l)["lambda"] == 1);
    CHECK(json(c)["lambda"].is_null());
    const auto md = multiplicity_data(e8_graph(), 7);
    CHECK(round_trip(md) == md);
}

TEST_CASE("table rows and sweeps") {
    for (const auto& row : reproduce_table(TableId::Table2)) CHECK(round_trip(row) == row);
    const auto s = xterm_sweep(slope_model(2, 1, 3, 2, 5, 4, 2), 17);
    CHECK(round_trip(s) == s);
    CHECK(json(CoboundaryTypeRow{})["type"] == "FAIL");
}

TEST_CASE("verdicts") {
    TautOptions opt;
    opt.t_max = 60;
    const auto v = taut_certificate(e8_graph(), 7, opt);
    CHECK(round_trip(v) == v);
    CHECK(json(v)["kind"] == "Taut");

    TautOptions dt;
    dt.z_tilde = CycleVec{7, 5, 7, 4, 4, 4, 4};
    const auto w = taut_certificate(dtilde_graph(), 3, dt);
    REQUIRE(w.obstruction.has_value());
    CHECK(round_trip(*w.obstruction) == *w.obstruction);
    CHECK(round_trip(w) == w);

    TautOptions lam;
    lam.lambda = 2;
    const auto m = taut_certificate(star_graph(3, {{2}, {2}, {2}, {2}}), 7, lam);
    CHECK(round_trip(m) == m);
    for (const auto& o : m.orbits) CHECK(round_trip(o) == o);
}

TEST_CASE("cech results and uniqueness reports") {
    const auto c = cech_h1_rank(chain_graph({2, 2, 2}), 2);
    CHECK(round_trip(c) == c);
    CHECK(json(c)["model"] == "chain");
    const auto u = verify_f_pure_uniqueness(2, 5);
    CHECK(round_trip(u) == u);
    for (const auto& row : u.rows) CHECK(round_trip(row) == row);
}

TEST_CASE("run report envelope") {
    RunReport r;
    r.command = "classify";
    r.arguments = {"classify", "--graph", "e8.sdg", "--char", "7"};
    r.inputs.push_back({"e8.sdg", fnv1a_hex(format_graph(e8_graph()))});
    r.result = hara_f_pure(e8_graph(), 7);
    r.clauses = {r.result["clause"].get<std::string>()};
    r.exit_status = 0;
    CHECK(round_trip(r) == r);
    CHECK(round_trip(r.inputs[0]) == r.inputs[0]);
}

TEST_CASE("fnv1a_hex") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("vertex a b=2\n").size() == 16);
}
