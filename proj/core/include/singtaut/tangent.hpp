#pragma once

#include <array>
#include <string>
#include <vector>

#include "singtaut/graph.hpp"

namespace singtaut {

/// Local equation of a plumbing chart.
enum class ChartShape {
    Y,     ///< y^nu
    XY,    ///< x^nu_x y^nu
    X1XY,  ///< (x-1)^nu_x1 x^nu_x y^nu
};

struct ChartModel {
    std::string id;
    ChartShape shape = ChartShape::Y;
    Int nu = 1;
    Int nu_x = 0;
    Int nu_x1 = 0;
};

/// One summand of the tangent module: (k[x,y]/modulus) * prefactor * d/d<partial>.
/// Exponent triples are ordered ((x-1), x, y).
struct TangentFamily {
    char partial = 'x';
    std::array<Int, 3> prefactor{0, 0, 0};
    std::array<Int, 3> modulus{0, 0, 0};
    /// Largest y-degree of prefactor times coefficient that survives.
    Int t_max = 0;
    std::string text;

    bool operator==(const TangentFamily&) const = default;
};

/// Throws Error if p divides a multiplicity of the chart.
std::vector<TangentFamily> tangent_basis(const ChartModel& chart, Int p);

/// (x-1)^r x^s y^t (cx * x d/dx + cy * y d/dy).
struct TangentTerm {
    Int r = 0;
    Int s = 0;
    Int t = 0;
    Int cx = 1;
    Int cy = 0;

    bool operator==(const TangentTerm&) const = default;
};

TangentTerm xx_term(Int s, Int t);
TangentTerm yy_term(Int s, Int t);
/// a * x d/dx - b * y d/dy.
TangentTerm rel_term(Int s, Int t, Int a, Int b);

/// "XX", "YY", "REL(a,b)" or "cx*XX+cy*YY".
std::string direction_label(const TangentTerm& term);

/// Rewrites a term in the next chart x = 1/y', y = x' y'^b.
/// Throws Error when the term carries an (x-1) factor.
TangentTerm change_coords(const TangentTerm& term, Int b);

/// Inverse of change_coords for the same b.
TangentTerm change_coords_inverse(const TangentTerm& term, Int b);

enum class FamilySource { Branch1, Branch2, Branch3, U0, U1, Pole };

/// Monomial family x^s y^t (cx XX + cy YY) cut out by linear constraints.
struct CoboundaryFamily {
    FamilySource source = FamilySource::Branch1;
    Int cx = 1;
    Int cy = 0;
    Int s_min = 0;
    Int s_max = 0;
    Int alpha = 1;
    Int beta = 1;
    /// beta t = alpha s + 1 when set, else beta t <= alpha s.
    bool equality = false;

    bool contains(Int s, Int t) const;
    std::string describe() const;
};

/// Image of the sections over one branch in the overlap with the central chart:
/// XX, YY and the relation family, in that order.
std::array<CoboundaryFamily, 3> branch_image(const BranchProfile& profile, Int nu_first,
                                             FamilySource source = FamilySource::Branch1);

}  // namespace singtaut
