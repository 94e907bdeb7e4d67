#include <doctest.h>

#include "test_support.hpp"

using namespace singtaut;

TEST_CASE("tangent_basis for y^nu") {
    const auto fams = tangent_basis({"U", ChartShape::Y, 3, 0, 0}, 2);
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].partial == 'x');
    CHECK(fams[0].t_max == 2);
    CHECK(fams[1].partial == 'y');
    CHECK(fams[1].prefactor == std::array<Int, 3>{0, 0, 1});
    CHECK(fams[1].modulus[2] - 1 == 1);
    CHECK_THROWS_AS(tangent_basis({"U", ChartShape::Y, 4, 0, 0}, 2), Error);
}

TEST_CASE("tangent_basis for x^a y^b") {
    const auto fams = tangent_basis({"U", ChartShape::XY, 3, 2, 0}, 5);
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].prefactor == std::array<Int, 3>{0, 1, 0});
    CHECK(fams[0].modulus == std::array<Int, 3>{0, 1, 3});
    CHECK(fams[1].prefactor == std::array<Int, 3>{0, 0, 1});
    CHECK(fams[1].modulus == std::array<Int, 3>{0, 2, 2});
    CHECK(fams[0].text == "(k[x,y]/(x y^3)) x d/dx");
}

TEST_CASE("tangent_basis for (x-1)^c x^a y^b") {
    const auto fams = tangent_basis({"U", ChartShape::X1XY, 4, 3, 2}, 5);
    CHECK(fams[0].prefactor == std::array<Int, 3>{1, 1, 0});
    CHECK(fams[0].modulus == std::array<Int, 3>{1, 2, 4});
    CHECK(fams[1].modulus == std::array<Int, 3>{2, 3, 3});
    CHECK_THROWS_AS(tangent_basis({"U", ChartShape::X1XY, 4, 3, 5}, 5), Error);
}

TEST_CASE("change_coords") {
    const auto rel = change_coords(xx_term(0, 0), 2);
    CHECK(direction_label(rel) == "REL(2,1)");
    CHECK(rel == rel_term(0, 0, 2, 1));

    for (Int s = 0; s < 5; ++s)
        for (Int t = 0; t < 5; ++t) {
            const auto img = change_coords(yy_term(s, t), 3);
            CHECK(img == TangentTerm{0, t, 3 * t - s, 1, 0});
            CHECK(direction_label(img) == "XX");
        }
    CHECK_THROWS_AS(change_coords(TangentTerm{1, 0, 0, 1, 0}, 2), Error);
}

TEST_CASE("change_coords is invertible") {
    for (Int b = 2; b <= 6; ++b)
        for (Int s = -3; s <= 6; ++s)
            for (Int t = -3; t <= 6; ++t)
                for (const auto& term : {xx_term(s, t), yy_term(s, t), rel_term(s, t, 3, 2)}) {
                    CHECK(change_coords_inverse(change_coords(term, b), b) == term);
                    CHECK(change_coords(change_coords_inverse(term, b), b) == term);
                }
}

TEST_CASE("branch_image membership") {
    const auto img = branch_image(make_branch({2}), 2);
    CHECK(img[0].contains(0, 0));
    CHECK_FALSE(img[0].contains(0, 1));
    CHECK(img[1].contains(1, 2));
    CHECK_FALSE(img[1].contains(2, 0));
    CHECK(img[2].contains(0, 1));
    CHECK(img[2].contains(1, 3));
    CHECK_FALSE(img[2].contains(1, 2));
    CHECK(img[0].describe() == "XX: 0 <= s <= 0, 1t <= 2s");
    CHECK_THROWS_AS(branch_image(make_branch({1}), 2), Error);
}

TEST_CASE("one-curve branch image is t <= b s") {
    for (Int b = 2; b <= 6; ++b) {
        const Int nu = 7;
        const auto img = branch_image(make_branch({b}), nu);
        for (Int s = 0; s < nu; ++s)
            for (Int t = 0; t <= b * nu; ++t) {
                CHECK(img[0].contains(s, t) == (s <= nu - 2 && t <= b * s));
                CHECK(img[1].contains(s, t) == (t <= b * s));
                CHECK(img[2].contains(s, t) == (t == b * s + 1));
            }
    }
}
