#include "singtaut/star_cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace singtaut {

Int floor_of(const Rational& q) {
    Int n = q.numerator(), d = q.denominator();
    Int f = n / d;
    if ((n % d != 0) && (n < 0)) --f;
    return f;
}

Int ceil_of(const Rational& q) { return -floor_of(-q); }

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(CoboundaryType t) {
    switch (t) {
        case CoboundaryType::A: return "A";
        case CoboundaryType::B: return "B";
        case CoboundaryType::C: return "C";
        case CoboundaryType::D: return "D";
        case CoboundaryType::FAIL: return "FAIL";
    }
    return "?";
}

StarCohomologyData slope_model(Int a1, Int b1, Int a2, Int b2, Int a3, Int b3, Int b0) {
    StarCohomologyData d;
    d.alpha = {a1, a2, a3};
    d.beta = {b1, b2, b3};
    d.b0 = b0;
    d.alpha_prime = b0 * a3 - b3;
    d.nu0 = kUncapped;
    d.nu_first = {kUncapped, kUncapped, kUncapped};
    d.type_tuple = {a1, a2, a3};
    return d;
}

StarCohomologyData star_cohomology_data(const DualGraph& g, Int p, const MultiplicityData& md,
                                        const std::optional<std::array<std::size_t, 3>>& order) {
    auto shape = classify_shape(g);
    const auto* st = std::get_if<StarShape>(&shape);
    if (!st || st->data.branches.size() != 3) throw Error("graph is not a star with three branches");
    if (md.z.size() != g.size()) throw Error("multiplicity data does not match the graph");
    std::array<std::size_t, 3> ord{0, 1, 2};
    if (order) {
        ord = *order;
        auto sorted = ord;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<std::size_t, 3>{0, 1, 2}) throw Error("branch order must permute 0, 1, 2");
    }
    const auto& s = st->data;
    StarCohomologyData d;
    d.b0 = s.b0;
    d.p = p;
    d.nu0 = md.z[s.center];
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& br = s.branches[ord[i]];
        d.alpha[i] = br.alpha;
        d.beta[i] = br.beta;
        d.nu_first[i] = md.z[br.vertices.front()];
        d.gates[i] = br.alpha % p != 0;
        d.type_tuple.push_back(br.alpha);
    }
    d.alpha_prime = d.b0 * d.alpha[2] - d.beta[2];
    return d;
}

namespace {

Int r_a(const StarCohomologyData& d, Int t) { return std::min(ceil_of(d.q2() * t + 1), d.nu_first[1]); }

Rational s_a_bound(const StarCohomologyData& d, Int t) {
    return std::min(d.q1() * t, Rational(d.nu_first[0] - 1));
}

std::optional<Int> exact_div(Int num, Int den) {
    if (num % den != 0) return std::nullopt;
    return num / den;
}

// Exponent of the branch-1 relation, if it exists at this t.
std::optional<Int> s_branch1(const StarCohomologyData& d, Int t) {
    if (t < 1) return std::nullopt;
    auto s1 = exact_div(d.beta[0] * t - 1, d.alpha[0]);
    if (!s1 || *s1 < 0 || *s1 > d.nu_first[0] - 1) return std::nullopt;
    return s1;
}

// r of the branch-2 relation (the power of (x-1) on the YY part).
std::optional<Int> r_branch2(const StarCohomologyData& d, Int t) {
    if (t < 1) return std::nullopt;
    auto r2 = exact_div(d.beta[1] * t - 1, d.alpha[1]);
    if (!r2 || *r2 < 1 || *r2 > d.nu_first[1] - 1) return std::nullopt;
    return r2;
}

Int s_c(const StarCohomologyData& d, Int t) { return std::min(ceil_of(d.q1() * t), d.nu_first[0]); }

// Branch-3 exponent of the U1 relation.
std::optional<Int> s_branch3(const StarCohomologyData& d, Int t) {
    auto s3 = exact_div(d.beta[2] * t - 1, d.alpha[2]);
    if (!s3 || *s3 < 0 || *s3 > d.nu_first[2] - 1) return std::nullopt;
    return s3;
}

std::string gate_note(const StarCohomologyData& d, int i) {
    return "alpha" + std::to_string(i + 1) + " = " + std::to_string(d.alpha[i]) + " vanishes mod " + std::to_string(d.p);
}

}  // namespace

bool yterm_vanishing_check(const StarCohomologyData& d, Int t) {
    return Rational(floor_of(d.qp() * t) + 1) >= d.q1() * t + ceil_of(d.q2() * t);
}

bool yterm_capped_check(const StarCohomologyData& d, Int t) {
    Int fy = std::max(floor_of(d.qp() * t), d.b0 * t - d.nu_first[2]);
    Int r = std::min(ceil_of(d.q2() * t), d.nu_first[1]);
    return Rational(fy + 1 - r) >= std::min(d.q1() * t, Rational(d.nu_first[0]));
}

CoboundaryTypeRow xterm_coboundary_type(const StarCohomologyData& d, Int t) {
    CoboundaryTypeRow row;
    row.t = t;
    row.s_min = floor_of(d.qp() * t) + 1;
    const Int s = row.s_min;
    std::vector<std::string> gated;
    const Int ra = r_a(d, t);
    if (Rational(s - ra) >= s_a_bound(d, t)) {
        row.r = ra;
        row.s_minus_r = s - ra;
        row.type = CoboundaryType::A;
        return row;
    }
    if (auto s1 = s_branch1(d, t); s1 && s - ra == *s1) {
        if (d.gates[0]) {
            row.r = ra;
            row.s_minus_r = *s1;
            row.type = CoboundaryType::B;
            return row;
        }
        gated.push_back("B: " + gate_note(d, 0));
    }
    if (auto r2 = r_branch2(d, t); r2 && s - (*r2 + 1) == s_c(d, t)) {
        if (d.gates[1]) {
            row.r = *r2 + 1;
            row.s_minus_r = s - *r2 - 1;
            row.type = CoboundaryType::C;
            return row;
        }
        gated.push_back("C: " + gate_note(d, 1));
    }
    if (auto s3 = s_branch3(d, t); s3 && d.alpha[2] * s == d.alpha_prime * t + 1 && d.b0 * t - s == *s3) {
        if (d.gates[2]) {
            row.r = 0;
            row.s_minus_r = s;
            row.type = CoboundaryType::D;
            return row;
        }
        gated.push_back("D: " + gate_note(d, 2));
    }
    row.type = CoboundaryType::FAIL;
    for (const auto& g : gated) row.note += (row.note.empty() ? "" : "; ") + g;
    auto sw = xterm_sweep(d, t);
    row.note += std::string(row.note.empty() ? "" : "; ") + (sw.ok ? "sweep covers every s" : "sweep: " + sw.reason);
    return row;
}

bool row_satisfies_rule(const StarCohomologyData& d, const CoboundaryTypeRow& row) {
    const Int t = row.t;
    if (row.type == CoboundaryType::FAIL) return !row.r && !row.s_minus_r;
    if (!row.r || !row.s_minus_r) return false;
    const Int r = *row.r, dd = *row.s_minus_r, s = r + dd;
    switch (row.type) {
        case CoboundaryType::A: {
            Int ra = std::min(ceil_of(Rational(d.beta[1] * t + d.alpha[1], d.alpha[1])), d.nu_first[1]);
            Rational bound = std::min(Rational(d.beta[0] * t, d.alpha[0]), Rational(d.nu_first[0] - 1));
            return r == ra && Rational(dd) >= bound;
        }
        case CoboundaryType::B: {
            Int ra = std::min(ceil_of(Rational(d.beta[1] * t + d.alpha[1], d.alpha[1])), d.nu_first[1]);
            return t >= 1 && r == ra && d.alpha[0] * dd == d.beta[0] * t - 1 && d.gates[0];
        }
        case CoboundaryType::C:
            return t >= 1 && d.alpha[1] * r == d.beta[1] * t + d.alpha[1] - 1 && r >= 2 &&
                   dd == std::min(ceil_of(Rational(d.beta[0] * t, d.alpha[0])), d.nu_first[0]) && d.gates[1];
        case CoboundaryType::D:
            return r == 0 && d.alpha[2] * s == d.alpha_prime * t + 1 && d.gates[2];
        case CoboundaryType::FAIL: break;
    }
    return false;
}

SweepResult xterm_sweep(const StarCohomologyData& d, Int t) {
    SweepResult res;
    res.t = t;
    const Int fx = std::max(floor_of(d.qp() * t), d.b0 * t - d.nu_first[2] + 1);
    res.s_start = fx + 1;
    const Int ra = r_a(d, t);
    const Rational bound = s_a_bound(d, t);
    const auto s1 = d.gates[0] ? s_branch1(d, t) : std::nullopt;
    const auto r2 = d.gates[1] ? r_branch2(d, t) : std::nullopt;
    const auto s3 = d.gates[2] && t >= 1 ? s_branch3(d, t) : std::nullopt;
    const Int sc = s_c(d, t);
    const Int rc = r2 ? *r2 + 1 : 0;
    for (Int s = res.s_start;; ++s) {
        if (Rational(s - ra) >= bound) {
            res.steps.push_back({s, CoboundaryType::A, ra});
            res.ok = true;
            return res;
        }
        if (s1 && s - ra == *s1) {
            res.steps.push_back({s, CoboundaryType::B, ra});
        } else if (r2 && s - rc == sc) {
            res.steps.push_back({s, CoboundaryType::C, rc});
        } else if (s3 && s == d.b0 * t - *s3) {
            res.steps.push_back({s, CoboundaryType::D, 0});
        } else {
            res.reason = "no coboundary type at t = " + std::to_string(t) + ", s = " + std::to_string(s);
            return res;
        }
    }
}

AnalyticTail analytic_tail(const StarCohomologyData& d) {
    AnalyticTail a;
    a.c1 = d.qp() - d.q2() - d.q1();
    a.c0 = -Rational(d.alpha[2] - 1, d.alpha[2]) - Rational(d.alpha[1] - 1, d.alpha[1]);
    a.positive_slope = a.c1 > 0;
    if (a.positive_slope) a.threshold = std::max<Int>(0, ceil_of(-a.c0 / a.c1));
    return a;
}

namespace {

// Types the explicit element (x-1)^r x^(s-r) y^t by the defining rules.
CoboundaryTypeRow classify_element(const StarCohomologyData& d, Int t, Int r, Int dd) {
    CoboundaryTypeRow row;
    row.t = t;
    row.s_min = r + dd;
    row.r = r;
    row.s_minus_r = dd;
    for (auto ty : {CoboundaryType::A, CoboundaryType::B, CoboundaryType::C, CoboundaryType::D}) {
        row.type = ty;
        if (row_satisfies_rule(d, row)) {
            if (row.s_min <= floor_of(d.qp() * t)) row.note = "element lies in the U1 range";
            return row;
        }
    }
    row.type = CoboundaryType::FAIL;
    return row;
}

}  // namespace

std::optional<TableId> parse_table_id(const std::string& s) {
    if (s == "t1") return TableId::Table1;
    if (s == "t2") return TableId::Table2;
    if (s == "c236" || s == "c236a") return TableId::Case236a;
    if (s == "c236b") return TableId::Case236b;
    if (s == "c244") return TableId::Case244;
    return std::nullopt;
}

std::string table_name(TableId id) {
    switch (id) {
        case TableId::Table1: return "t1";
        case TableId::Table2: return "t2";
        case TableId::Case236a: return "c236";
        case TableId::Case236b: return "c236b";
        case TableId::Case244: return "c244";
    }
    return "?";
}

std::vector<CoboundaryTypeRow> reproduce_table(TableId id) {
    std::vector<CoboundaryTypeRow> rows;
    auto sweep_rows = [&](const StarCohomologyData& d, Int t_max) {
        for (Int t = 0; t <= t_max; ++t) rows.push_back(xterm_coboundary_type(d, t));
    };
    switch (id) {
        case TableId::Table1: sweep_rows(slope_model(2, 1, 3, 2, 4, 3, 2), 16); break;
        case TableId::Table2: sweep_rows(slope_model(2, 1, 3, 2, 5, 4, 2), 43); break;
        case TableId::Case236a: sweep_rows(slope_model(2, 1, 3, 1, 6, 5, 2), 4); break;
        case TableId::Case236b: {
            // Elements (t, r, s - r) named for slopes (1/2, 2/3, 11/6).
            auto d = slope_model(2, 1, 3, 2, 6, 1, 2);
            for (auto [t, r, dd] : {std::array<Int, 3>{0, 1, 0}, {1, 2, 0}, {2, 2, 1}})
                rows.push_back(classify_element(d, t, r, dd));
            break;
        }
        case TableId::Case244: {
            // Elements (t, r, s - r) named for slopes (1/2, 3/4, 7/4).
            auto d = slope_model(2, 1, 4, 3, 4, 1, 2);
            for (auto [t, r, dd] : {std::array<Int, 3>{0, 1, 0}, {1, 2, 0}, {2, 3, 1}})
                rows.push_back(classify_element(d, t, r, dd));
            break;
        }
    }
    return rows;
}

std::string format_table(const std::vector<CoboundaryTypeRow>& rows) {
    std::ostringstream os;
    os << "t\tmin{s}\tr\tmin{s-r}\tType\n";
    for (const auto& r : rows) {
        os << r.t << '\t' << r.s_min << '\t' << (r.r ? std::to_string(*r.r) : "-") << '\t'
           << (r.s_minus_r ? std::to_string(*r.s_minus_r) : "-") << '\t' << to_string(r.type) << '\n';
    }
    return os.str();
}

}  // namespace singtaut
