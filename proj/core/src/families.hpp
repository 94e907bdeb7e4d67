#pragma once

// Coboundary generators shared by the Cech models and the obstruction audit.
// Directions: 0 = XX (x d/dx), 1 = YY (y d/dy).

#include <vector>

#include "singtaut/modp.hpp"
#include "singtaut/star_cohomology.hpp"

namespace singtaut::detail {

/// coef * (x-1)^r x^s in direction dir.
struct PolyPiece {
    int dir = 0;
    Int r = 0;
    Int s = 0;
    Int coef = 1;
};

struct U0Generator {
    const char* family = "";
    std::vector<PolyPiece> pieces;
    Int top() const {
        Int m = pieces.front().r + pieces.front().s;
        for (const auto& pc : pieces) m = std::max(m, pc.r + pc.s);
        return m;
    }
};

/// Local data of the two branches met by the chart around x = 0 and x = 1.
struct LocalPair {
    Int a1 = 1, b1 = 1, nu1 = 1;
    Int a2 = 1, b2 = 1, nu2 = 1;
};

/// Base (k = 0) generators of the sections over the chart at slice t.
inline std::vector<U0Generator> u0_generators(const LocalPair& lp, Int t) {
    const Rational q1(lp.b1, lp.a1), q2(lp.b2, lp.a2);
    const Int ra = std::min(ceil_of(q2 * t + 1), lp.nu2);
    const Int sa = std::min(ceil_of(q1 * t), lp.nu1 - 1);
    const Int ry = std::min(ceil_of(q2 * t), lp.nu2);
    const Int sy = std::min(ceil_of(q1 * t), lp.nu1);
    std::vector<U0Generator> out;
    out.push_back({"U0x", {{0, ra, sa, 1}}});
    out.push_back({"U0y", {{1, ry, sy, 1}}});
    if (t >= 1 && (lp.b1 * t - 1) % lp.a1 == 0) {
        Int s1 = (lp.b1 * t - 1) / lp.a1;
        if (s1 >= 0 && s1 <= lp.nu1 - 1) out.push_back({"Brel", {{0, ra, s1, lp.a1}, {1, ra, s1, -lp.b1}}});
    }
    if (t >= 1 && (lp.b2 * t - 1) % lp.a2 == 0) {
        Int r2 = (lp.b2 * t - 1) / lp.a2;
        if (r2 >= 1 && r2 <= lp.nu2 - 1) {
            Int sc = std::min(ceil_of(q1 * t), lp.nu1);
            out.push_back({"Crel", {{0, r2 + 1, sc, lp.a2}, {1, r2, sc, -lp.b2}}});
        }
    }
    return out;
}

/// Emits the terms of coef * (x-1)^r x^s with exponent in [lo, hi] through
/// mono(dir, e, c).
template <class Mono>
void emit_poly(const Fp& f, Mono&& mono, int dir, Int r, Int s, Int coef, Int lo, Int hi) {
    for (Int i = std::max<Int>(0, lo - s); i <= std::min(r, hi - s); ++i) {
        Int c = f.mul(coef, f.binom(r, i));
        if ((r - i) % 2) c = f.norm(-c);
        mono(dir, s + i, c);
    }
}

/// Emits coef * x^m (x-1)^(-k) as monomials x^e and poles (x-1)^(-j).
/// Nonnegative monomials below lo are skipped.
template <class Mono, class Pole>
void emit_rational(const Fp& f, Mono&& mono, Pole&& pole, int dir, Int m, Int k, Int coef, Int lo) {
    if (k == 0) {
        if (m >= lo || m < 0) mono(dir, m, f.norm(coef));
        return;
    }
    if (m >= 0) {
        for (Int i = 0; i < k && i <= m; ++i) pole(dir, k - i, f.mul(coef, f.binom(m, i)));
        for (Int e = std::max<Int>(0, lo); e <= m - k; ++e) mono(dir, e, f.mul(coef, f.binom(m - e - 1, k - 1)));
        return;
    }
    const Int a = -m;
    for (Int i = 0; i < k; ++i) pole(dir, k - i, f.mul(coef, f.binom_any(-a, i)));
    const Int sign = k % 2 ? -1 : 1;
    for (Int i = 0; i < a; ++i) mono(dir, i - a, f.mul(coef, f.norm(sign * f.binom(k + i - 1, i))));
}

}  // namespace singtaut::detail
