#include "singtaut/tangent.hpp"

namespace singtaut {

namespace {

void require_unit(Int nu, Int p, const char* what) {
    if (nu <= 0) throw Error(std::string(what) + " must be positive");
    if (nu % p == 0) throw Error(std::string(what) + " = " + std::to_string(nu) + " is divisible by p");
}

std::string factor_text(const std::array<Int, 3>& e) {
    static const char* names[3] = {"(x-1)", "x", "y"};
    std::string out;
    for (int k = 0; k < 3; ++k) {
        if (e[k] == 0) continue;
        if (!out.empty()) out += " ";
        out += names[k];
        if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
    return out.empty() ? "1" : out;
}

TangentFamily family(char partial, std::array<Int, 3> pre, std::array<Int, 3> mod) {
    TangentFamily f;
    f.partial = partial;
    f.prefactor = pre;
    f.modulus = mod;
    f.t_max = pre[2] + mod[2] - 1;
    f.text = "(k[x,y]/(" + factor_text(mod) + ")) " + (pre == std::array<Int, 3>{0, 0, 0} ? "" : factor_text(pre) + " ") +
             "d/d" + partial;
    return f;
}

}  // namespace

std::vector<TangentFamily> tangent_basis(const ChartModel& c, Int p) {
    require_prime(p);
    require_unit(c.nu, p, "nu");
    switch (c.shape) {
        case ChartShape::Y:
            return {family('x', {0, 0, 0}, {0, 0, c.nu}), family('y', {0, 0, 1}, {0, 0, c.nu - 1})};
        case ChartShape::XY:
            require_unit(c.nu_x, p, "nu_x");
            return {family('x', {0, 1, 0}, {0, c.nu_x - 1, c.nu}), family('y', {0, 0, 1}, {0, c.nu_x, c.nu - 1})};
        case ChartShape::X1XY:
            require_unit(c.nu_x, p, "nu_x");
            require_unit(c.nu_x1, p, "nu_x1");
            return {family('x', {1, 1, 0}, {c.nu_x1 - 1, c.nu_x - 1, c.nu}),
                    family('y', {0, 0, 1}, {c.nu_x1, c.nu_x, c.nu - 1})};
    }
    throw Error("unknown chart shape");
}

TangentTerm xx_term(Int s, Int t) { return {0, s, t, 1, 0}; }
TangentTerm yy_term(Int s, Int t) { return {0, s, t, 0, 1}; }
TangentTerm rel_term(Int s, Int t, Int a, Int b) { return {0, s, t, a, -b}; }

std::string direction_label(const TangentTerm& term) {
    if (term.cx == 1 && term.cy == 0) return "XX";
    if (term.cx == 0 && term.cy == 1) return "YY";
    if (term.cx > 0 && term.cy < 0) return "REL(" + std::to_string(term.cx) + "," + std::to_string(-term.cy) + ")";
    return std::to_string(term.cx) + "*XX+" + std::to_string(term.cy) + "*YY";
}

// x d/dx = b x' d/dx' - y' d/dy', y d/dy = x' d/dx', x^s y^t = x'^t y'^(bt - s).
TangentTerm change_coords(const TangentTerm& term, Int b) {
    if (term.r != 0) throw Error("change_coords needs a term without an (x-1) factor");
    return {0, term.t, b * term.t - term.s, b * term.cx + term.cy, -term.cx};
}

TangentTerm change_coords_inverse(const TangentTerm& term, Int b) {
    if (term.r != 0) throw Error("change_coords_inverse needs a term without an (x-1) factor");
    return {0, b * term.s - term.t, term.s, -term.cy, term.cx + b * term.cy};
}

bool CoboundaryFamily::contains(Int s, Int t) const {
    if (s < s_min || s > s_max) return false;
    return equality ? beta * t == alpha * s + 1 : beta * t <= alpha * s;
}

std::string CoboundaryFamily::describe() const {
    std::string dir = cx == 1 && cy == 0 ? "XX" : cx == 0 && cy == 1 ? "YY" : "REL(" + std::to_string(cx) + "," +
                                                                                  std::to_string(-cy) + ")";
    std::string cond = std::to_string(beta) + "t " + (equality ? "= " : "<= ") + std::to_string(alpha) + "s" +
                       (equality ? " + 1" : "");
    return dir + ": " + std::to_string(s_min) + " <= s <= " + std::to_string(s_max) + ", " + cond;
}

std::array<CoboundaryFamily, 3> branch_image(const BranchProfile& profile, Int nu_first, FamilySource source) {
    if (profile.bs.empty()) throw Error("empty branch profile");
    for (auto b : profile.bs)
        if (b < 2) throw Error("branch image needs every b >= 2");
    if (nu_first < 1) throw Error("branch multiplicity must be positive");
    auto [a, be] = branch_fraction(profile.bs);
    CoboundaryFamily xx{source, 1, 0, 0, nu_first - 2, a, be, false};
    CoboundaryFamily yy{source, 0, 1, 0, nu_first - 1, a, be, false};
    CoboundaryFamily rel{source, a, -be, 0, nu_first - 1, a, be, true};
    return {xx, yy, rel};
}

}  // namespace singtaut
