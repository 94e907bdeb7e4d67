#pragma once

// Two-overlap Cech model of a D-tilde configuration. Overlap 0 sits on the
// first chain curve, overlap 1 on the last one; the chain between them is a
// single toric chart carrying the middle cochains.

#include <functional>
#include <utility>
#include <vector>
#include <string>

#include "families.hpp"
#include "singtaut/dtilde.hpp"

namespace singtaut::detail {

// Monomials x^e on overlap o at slice t with e <= lower[o][t] are images of
// sections whose partner exponent reaches past the other overlap's slices, so
// they are coboundaries in both directions and are quotiented. The window keeps
// e in (lower, lower + S] and poles of order <= R.
struct DTildeModel {
    Int p = 2;
    Int S = 32;
    Int R = 8;
    Matrix2 m{};
    Matrix2 d{};
    /// (M^T)^{-1}: (a, c) from (s, t).
    Matrix2 inv_t{};
    std::array<Int, 2> nu_end{};
    std::array<Int, 2> nu_next{};
    std::array<Int, 2> b_end{};
    std::array<LocalPair, 2> leaves{};
    std::array<std::vector<Int>, 2> lower;

    Int t_max() const { return std::max(nu_end[0], nu_end[1]) - 1; }
    Int width() const { return S + R; }
    /// Largest slice carrying direction dir on overlap o.
    Int bound(int o, int dir) const { return nu_end[o] - 1 - dir; }
    Int base(int o, int dir, Int t) const { return ((o * 2 + dir) * (t_max() + 1) + t) * width(); }
    Int mono_col(int o, int dir, Int t, Int e) const { return base(o, dir, t) + e - lower[o][t] - 1; }
    Int pole_col(int o, int dir, Int t, Int j) const { return base(o, dir, t) + S + j - 1; }
    /// Coordinates of x^e y^t on overlap o seen from the other overlap.
    std::pair<Int, Int> partner(int o, Int e, Int t) const {
        const Matrix2& a = o == 0 ? inv_t : d;
        return {a[0][0] * e + a[0][1] * t, a[1][0] * e + a[1][1] * t};
    }
};

DTildeModel make_dtilde_model(const DualGraph& g, const DTildeData& dd, Int p, const MultiplicityData& md, Int S,
                              Int R);

using GeneratorSink = std::function<void(const std::string& family, SparseVec&& v)>;

/// Every coboundary generator that fits the window.
void for_each_dtilde_generator(const DTildeModel& model, const GeneratorSink& sink);

}  // namespace singtaut::detail
