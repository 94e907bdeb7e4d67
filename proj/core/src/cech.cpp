#include "singtaut/cech.hpp"

#include "dtilde_model.hpp"
#include "families.hpp"
#include "singtaut/classify.hpp"

namespace singtaut {

std::string to_string(CechModel m) {
    switch (m) {
        case CechModel::Star: return "star";
        case CechModel::Chain: return "chain";
        case CechModel::DTilde: return "dtilde";
    }
    return "?";
}

namespace {

// Accumulates one generator restricted to a window; out-of-window terms
// discard it.
struct WindowRow {
    explicit WindowRow(const Fp& field) : f(field) {}

    const Fp& f;
    SparseVec v;
    bool ok = true;

    void add(Int col, Int c) {
        c = f.norm(c);
        if (c == 0) return;
        auto& x = v[col];
        x = f.add(x, c);
        if (x == 0) v.erase(col);
    }
};

// Row echelon form over F_p on a fixed number of columns.
class DenseEchelon {
public:
    DenseEchelon(const Fp& f, Int cols) : f_(f), cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

    Int rank() const { return static_cast<Int>(rows_.size()); }

    bool insert(const SparseVec& sv) {
        std::vector<Int> v(static_cast<std::size_t>(cols_), 0);
        for (auto [c, x] : sv) v[static_cast<std::size_t>(c)] = x;
        for (Int c = 0; c < cols_; ++c) {
            const auto uc = static_cast<std::size_t>(c);
            if (v[uc] == 0) continue;
            const Int r = pivot_row_[uc];
            if (r < 0) {
                const Int inv = f_.inv(v[uc]);
                for (Int j = c; j < cols_; ++j) v[static_cast<std::size_t>(j)] = f_.mul(v[static_cast<std::size_t>(j)], inv);
                pivot_row_[uc] = static_cast<Int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            const auto& row = rows_[static_cast<std::size_t>(r)];
            const Int a = v[uc];
            for (Int j = c; j < cols_; ++j) {
                const auto uj = static_cast<std::size_t>(j);
                if (row[uj] != 0) v[uj] = f_.sub(v[uj], f_.mul(a, row[uj]));
            }
        }
        return false;
    }

private:
    const Fp& f_;
    Int cols_;
    std::vector<Int> pivot_row_;
    std::vector<std::vector<Int>> rows_;
};

template <class Echelon>
Int count_new(Echelon& ech, const std::vector<Int>& cols) {
    Int n = 0;
    for (Int c : cols)
        if (ech.insert(SparseVec{{c, 1}})) ++n;
    return n;
}

// Monomials x^e with e <= L are U1 coboundaries in both directions and are
// dropped; the window keeps e in (L, L + S] and poles of order <= R.
Int star_slice_rank(const StarCohomologyData& d, const Fp& f, Int t, Int S, Int R) {
    const bool has_yy = t <= d.nu0 - 2;
    const Int L = std::max(floor_of(d.qp() * t), d.b0 * t - d.nu_first[2]);
    const Int W = S + R;
    DenseEchelon ech(f, 2 * W);
    auto make_row = [&]() { return WindowRow(f); };
    auto mono_into = [&](WindowRow& row) {
        return [&row, &has_yy, L, S, W](int dir, Int e, Int c) {
            if (dir == 1 && !has_yy) return;
            if (e <= L || c == 0) return;
            if (e > L + S) {
                row.ok = false;
                return;
            }
            row.add(dir * W + (e - L - 1), c);
        };
    };
    auto pole_into = [&](WindowRow& row) {
        return [&row, &has_yy, S, R, W](int dir, Int j, Int c) {
            if (dir == 1 && !has_yy) return;
            if (c == 0) return;
            if (j > R) {
                row.ok = false;
                return;
            }
            row.add(dir * W + S + j - 1, c);
        };
    };
    const Int live_cols = has_yy ? 2 * W : W;
    // Returns true once the window is spanned and further rows are moot.
    auto commit = [&](WindowRow& row) {
        if (row.ok && !row.v.empty()) ech.insert(row.v);
        return ech.rank() == live_cols;
    };
    auto generate = [&]() {
        const detail::LocalPair lp{d.alpha[0], d.beta[0], d.nu_first[0], d.alpha[1], d.beta[1], d.nu_first[1]};
        for (const auto& g : detail::u0_generators(lp, t))
            for (Int k = std::max<Int>(0, L + 1 - g.top()); g.top() + k <= L + S; ++k) {
                auto row = make_row();
                auto mono = mono_into(row);
                for (const auto& pc : g.pieces) detail::emit_poly(f, mono, pc.dir, pc.r, pc.s + k, pc.coef, L + 1, L + S);
                if (commit(row)) return;
            }

        const Int cq3 = ceil_of(d.q3() * t);
        const Int fx = d.b0 * t - std::min(cq3, d.nu_first[2] - 1);
        const Int fy = d.b0 * t - std::min(cq3, d.nu_first[2]);
        for (Int k = 0; k <= R; ++k) {
            const Int sign = k % 2 ? -1 : 1;
            for (int which = 0; which < 2; ++which) {
                // Larger m leaves the window through the leading x^(m-k) term.
                const Int top = std::min((which == 0 ? fx : fy) + k, L + S + k);
                for (Int m = std::max(-R, L + k - 2 * R); m <= top; ++m) {
                    auto row = make_row();
                    auto mono = mono_into(row);
                    auto pole = pole_into(row);
                    if (which == 0) {
                        detail::emit_rational(f, mono, pole, 0, m, k, -sign, L + 1);
                        detail::emit_rational(f, mono, pole, 1, m, k, d.b0 * sign, L + 1);
                    } else {
                        detail::emit_rational(f, mono, pole, 1, m, k, sign, L + 1);
                    }
                    if (commit(row)) return;
                }
            }
        }
        if (t >= 1 && (d.beta[2] * t - 1) % d.alpha[2] == 0) {
            const Int s3 = (d.beta[2] * t - 1) / d.alpha[2];
            if (s3 >= 0 && s3 <= d.nu_first[2] - 1)
                for (Int k = 0; k <= R; ++k) {
                    const Int sign = k % 2 ? -1 : 1;
                    auto row = make_row();
                    auto mono = mono_into(row);
                    auto pole = pole_into(row);
                    const Int m = d.b0 * t + k - s3;
                    detail::emit_rational(f, mono, pole, 0, m, k, -d.alpha[2] * sign, L + 1);
                    detail::emit_rational(f, mono, pole, 1, m, k, d.alpha_prime * sign, L + 1);
                    if (commit(row)) return;
                }
        }
    };
    generate();

    std::vector<Int> inner;
    for (int dir = 0; dir < (has_yy ? 2 : 1); ++dir) {
        for (Int e = 1; e <= S / 2; ++e) inner.push_back(dir * W + e - 1);
        for (Int j = 1; j <= R / 2; ++j) inner.push_back(dir * W + S + j - 1);
    }
    return count_new(ech, inner);
}

Int star_rank(const StarCohomologyData& d, Int p, Int S, Int R) {
    const Fp f(p);
    Int total = 0;
    for (Int t = 0; t <= d.nu0 - 1; ++t) total += star_slice_rank(d, f, t, S, R);
    return total;
}

struct ChainParams {
    Int b1 = 2;
    Int nu1 = 1;
    bool single = true;
    Int alpha = 1, beta = 1, nu2 = 1;
};

Int chain_rank(const ChainParams& c, Int p, Int S) {
    const Fp f(p);
    const Int W = 2 * S + 1;
    Int total = 0;
    for (Int t = 0; t <= c.nu1 - 1; ++t) {
        const bool has_yy = t <= c.nu1 - 2;
        DenseEchelon ech(f, 2 * W);
        auto put = [&](std::initializer_list<std::pair<int, Int>> dirs, Int e) {
            WindowRow row(f);
            for (auto [dir, coef] : dirs) {
                if (dir == 1 && !has_yy) continue;
                if (f.norm(coef) == 0) continue;
                if (e < -S || e > S) return;
                row.add(dir * W + e + S, coef);
            }
            if (!row.v.empty()) ech.insert(std::move(row.v));
        };
        for (Int e = -1; e <= S; ++e) put({{0, 1}}, e);
        for (Int e = 0; e <= S; ++e) put({{1, 1}}, e);
        Int cx = -1, cy = 0;
        if (!c.single) {
            const Int cq = ceil_of(Rational(c.beta, c.alpha) * t);
            cx = std::min(cq, c.nu2 - 1);
            cy = std::min(cq, c.nu2);
        }
        for (Int m = -S; m <= c.b1 * t - cx; ++m) put({{0, -1}, {1, c.b1}}, m);
        for (Int m = -S; m <= c.b1 * t - cy; ++m) put({{1, 1}}, m);
        if (!c.single && t >= 1 && (c.beta * t - 1) % c.alpha == 0) {
            const Int s = (c.beta * t - 1) / c.alpha;
            if (s >= 0 && s <= c.nu2 - 1) put({{0, -c.alpha}, {1, c.alpha * c.b1 - c.beta}}, c.b1 * t - s);
        }
        std::vector<Int> inner;
        for (int dir = 0; dir < (has_yy ? 2 : 1); ++dir)
            for (Int e = -S / 2; e <= S / 2; ++e) inner.push_back(dir * W + e + S);
        total += count_new(ech, inner);
    }
    return total;
}

Int dtilde_rank(const detail::DTildeModel& m) {
    SparseEchelon ech(m.p);
    detail::for_each_dtilde_generator(m, [&](const std::string&, SparseVec&& v) { ech.insert(std::move(v)); });
    std::vector<Int> inner;
    for (int o = 0; o < 2; ++o)
        for (int dir = 0; dir < 2; ++dir)
            for (Int t = 0; t <= m.bound(o, dir); ++t) {
                for (Int e = 1; e <= m.S / 2; ++e) inner.push_back(m.mono_col(o, dir, t, m.lower[o][t] + e));
                for (Int j = 1; j <= m.R / 2; ++j) inner.push_back(m.pole_col(o, dir, t, j));
            }
    return count_new(ech, inner);
}

}  // namespace

CechResult cech_h1_rank(const DualGraph& g, Int p, Int S, Int R, const std::optional<CycleVec>& z_tilde,
                        const std::optional<std::array<std::size_t, 3>>& order) {
    require_prime(p);
    if (S < 2 || R < 2) throw Error("window sizes must be at least 2");
    const auto md = multiplicity_data(g, p, z_tilde);
    CechResult res;
    res.window_s = S;
    res.window_r = R;
    const auto shape = classify_shape(g);
    if (const auto* ch = std::get_if<ChainShape>(&shape)) {
        ChainParams c;
        const auto root = ch->order.front();
        c.b1 = g.vertex(root).b;
        c.nu1 = md.z[root];
        if (ch->order.size() > 1) {
            c.single = false;
            std::vector<Int> rest;
            for (std::size_t i = 1; i < ch->order.size(); ++i) rest.push_back(g.vertex(ch->order[i]).b);
            std::tie(c.alpha, c.beta) = branch_fraction(rest);
            c.nu2 = md.z[ch->order[1]];
        }
        res.model = CechModel::Chain;
        res.slices = c.nu1;
        res.rank = chain_rank(c, p, S);
        res.rank_doubled = chain_rank(c, p, 2 * S);
    } else if (const auto* st = std::get_if<StarShape>(&shape); st && st->data.branches.size() == 3) {
        const auto d = star_cohomology_data(g, p, md, order);
        res.model = CechModel::Star;
        res.slices = d.nu0;
        res.rank = star_rank(d, p, S, R);
        res.rank_doubled = star_rank(d, p, 2 * S, 2 * R);
    } else if (const auto dd = recognize_dtilde(g)) {
        res.model = CechModel::DTilde;
        res.slices = md.z[dd->chain.front()] + md.z[dd->chain.back()];
        res.rank = dtilde_rank(detail::make_dtilde_model(g, *dd, p, md, S, R));
        res.rank_doubled = dtilde_rank(detail::make_dtilde_model(g, *dd, p, md, 2 * S, 2 * R));
    } else {
        throw Error("Cech model needs a chain, a three-branch star or a D-tilde graph");
    }
    res.stable = res.rank == res.rank_doubled;
    return res;
}

}  // namespace singtaut
