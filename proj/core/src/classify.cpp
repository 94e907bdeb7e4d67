#include "singtaut/classify.hpp"

#include <algorithm>
#include <set>

namespace singtaut {

namespace {

std::string tuple_text(const std::vector<Int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

bool type_is(const StarData& s, std::initializer_list<Int> t) {
    return s.type_tuple == std::vector<Int>(t);
}

}  // namespace

CrossRatio::CrossRatio(Int lambda, Int p) : p_(p) {
    Fp f(p);
    value_ = f.norm(lambda);
    if (value_ == 0) throw Error("cross ratio must differ from 0");
    if (value_ == f.norm(-1)) throw Error("cross ratio must differ from -1");
}

std::string to_string(FKind k) {
    switch (k) {
        case FKind::FRegular: return "FRegular";
        case FKind::FPureNonRDP: return "FPureNonRDP";
        case FKind::RDPEquationDependent: return "RDPEquationDependent";
        case FKind::NotFPure: return "NotFPure";
        case FKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::string to_string(PureCase c) {
    switch (c) {
        case PureCase::None: return "None";
        case PureCase::Type333: return "Type333";
        case PureCase::Type236: return "Type236";
        case PureCase::Type244: return "Type244";
        case PureCase::Type2222: return "Type2222";
        case PureCase::DTilde: return "DTilde";
    }
    return "?";
}

Int hasse_sum(Int lambda, Int p) {
    if (p == 2) throw Error("the Hasse condition needs an odd characteristic");
    Fp f(p);
    const Int m = (p - 1) / 2;
    Int acc = 0, power = 1;
    const Int neg = f.norm(-lambda);
    for (Int k = 0; k <= m; ++k) {
        Int c = f.binom(m, k);
        acc = f.add(acc, f.mul(f.mul(c, c), power));
        power = f.mul(power, neg);
    }
    return acc;
}

bool condition_star(const CrossRatio& lambda, Int p) {
    if (p == 2) throw Error("the Hasse condition needs an odd characteristic");
    if (lambda.p() != p) throw Error("cross ratio lives in a different field");
    return hasse_sum(lambda.value(), p) != 0;
}

void require_rational(const DualGraph& g) {
    if (g.size() == 0) throw Error("empty graph");
    if (!g.is_connected()) throw Error("graph is disconnected");
    if (!is_negative_definite(intersection_matrix(g))) throw Error("intersection matrix is not negative definite");
    if (!is_rational_graph(g)) throw Error("graph is not rational");
}

bool hara_f_regular(const DualGraph& g, Int p) {
    require_prime(p);
    require_rational(g);
    auto shape = classify_shape(g);
    if (std::holds_alternative<ChainShape>(shape)) return true;
    if (const auto* st = std::get_if<StarShape>(&shape)) {
        const auto& s = st->data;
        if (s.type_tuple.size() != 3) return false;
        if (s.type_tuple[0] == 2 && s.type_tuple[1] == 2) return p != 2;
        if (type_is(s, {2, 3, 3}) || type_is(s, {2, 3, 4})) return p != 2 && p != 3;
        if (type_is(s, {2, 3, 5})) return p != 2 && p != 3 && p != 5;
    }
    return false;
}

std::optional<std::string> recognize_ade(const DualGraph& g) {
    if (g.size() == 0 || !g.is_connected()) return std::nullopt;
    for (const auto& v : g.vertices())
        if (v.b != 2 || v.genus != 0) return std::nullopt;
    auto shape = classify_shape(g);
    if (std::holds_alternative<ChainShape>(shape)) return "A" + std::to_string(g.size());
    const auto* st = std::get_if<StarShape>(&shape);
    if (!st || st->data.branches.size() != 3) return std::nullopt;
    std::vector<std::size_t> len;
    for (const auto& br : st->data.branches) len.push_back(br.bs.size());
    std::sort(len.begin(), len.end());
    if (len[0] == 1 && len[1] == 1) return "D" + std::to_string(len[2] + 3);
    if (len[0] == 1 && len[1] == 2 && len[2] >= 2 && len[2] <= 4) return "E" + std::to_string(len[2] + 4);
    return std::nullopt;
}

std::optional<DTildeData> recognize_dtilde(const DualGraph& g) {
    if (g.size() < 6 || !g.is_tree()) return std::nullopt;
    const auto deg = g.degrees();
    std::vector<std::size_t> ends;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (deg[i] == 3) ends.push_back(i);
        else if (deg[i] > 3) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    auto leaves_of = [&](std::size_t v) {
        std::vector<std::size_t> out;
        for (auto w : g.neighbours(v))
            if (deg[w] == 1) out.push_back(w);
        return out;
    };
    auto la = leaves_of(ends[0]), lb = leaves_of(ends[1]);
    if (la.size() != 2 || lb.size() != 2) return std::nullopt;
    // Walk from ends[0] to ends[1] through non-leaf vertices.
    DTildeData d;
    std::size_t prev = g.size(), cur = ends[0];
    d.chain.push_back(cur);
    while (cur != ends[1]) {
        std::size_t next = g.size();
        for (auto w : g.neighbours(cur))
            if (w != prev && deg[w] != 1) next = w;
        if (next == g.size()) return std::nullopt;
        prev = cur;
        cur = next;
        d.chain.push_back(cur);
    }
    if (d.chain.size() + 4 != g.size()) return std::nullopt;
    d.n = static_cast<Int>(d.chain.size());
    d.left_leaves = la;
    d.right_leaves = lb;
    if (std::min(lb[0], lb[1]) < std::min(la[0], la[1])) {
        std::reverse(d.chain.begin(), d.chain.end());
        std::swap(d.left_leaves, d.right_leaves);
    }
    return d;
}

FClassification hara_f_pure(const DualGraph& g, Int p, const std::optional<CrossRatio>& lambda) {
    require_prime(p);
    FClassification out;
    try {
        require_rational(g);
    } catch (const Error& e) {
        out.kind = FKind::NotApplicable;
        out.clause = e.what();
        return out;
    }
    auto shape = classify_shape(g);
    if (hara_f_regular(g, p)) {
        out.kind = FKind::FRegular;
        if (std::holds_alternative<ChainShape>(shape)) {
            out.clause = "rational chain, any characteristic";
        } else {
            const auto& s = std::get<StarShape>(shape).data;
            out.clause = "rational star of type " + tuple_text(s.type_tuple) + " with p = " + std::to_string(p) +
                         " outside the excluded characteristics";
        }
        return out;
    }
    if (const auto* st = std::get_if<StarShape>(&shape)) {
        const auto& s = st->data;
        const std::string ty = tuple_text(s.type_tuple);
        if ((type_is(s, {3, 3, 3}) || type_is(s, {2, 3, 6})) && p % 3 == 1) {
            out.kind = FKind::FPureNonRDP;
            out.pure_case = type_is(s, {3, 3, 3}) ? PureCase::Type333 : PureCase::Type236;
            out.clause = "star of type " + ty + " with p = 1 mod 3";
            return out;
        }
        if (type_is(s, {2, 4, 4}) && p % 4 == 1) {
            out.kind = FKind::FPureNonRDP;
            out.pure_case = PureCase::Type244;
            out.clause = "star of type " + ty + " with p = 1 mod 4";
            return out;
        }
        if (type_is(s, {2, 2, 2, 2}) && p != 2) {
            if (!lambda) throw Error("type (2,2,2,2) needs the cross ratio lambda");
            if (condition_star(*lambda, p)) {
                out.kind = FKind::FPureNonRDP;
                out.pure_case = PureCase::Type2222;
                out.lambda = lambda->value();
                out.clause = "star of type (2,2,2,2), p odd, Hasse sum nonzero at lambda = " +
                             std::to_string(lambda->value());
            } else {
                out.kind = FKind::NotFPure;
                out.lambda = lambda->value();
                out.clause = "star of type (2,2,2,2): Hasse sum vanishes at lambda = " +
                             std::to_string(lambda->value());
            }
            return out;
        }
    }
    if (recognize_dtilde(g) && p != 2) {
        out.kind = FKind::FPureNonRDP;
        out.pure_case = PureCase::DTilde;
        out.clause = "affine D-tilde shape with p odd (shape inferred: chain with two leaves at each end)";
        return out;
    }
    if (auto ade = recognize_ade(g)) {
        const std::string& lab = *ade;
        std::vector<Int> allowed;
        if (lab[0] == 'D') allowed = {2};
        if (lab == "E6" || lab == "E7") allowed = {2, 3};
        if (lab == "E8") allowed = {2, 3, 5};
        if (std::find(allowed.begin(), allowed.end(), p) != allowed.end()) {
            out.kind = FKind::RDPEquationDependent;
            out.family = lab;
            out.allowed_p = allowed;
            out.clause = "rational double point " + lab + " in characteristic " + std::to_string(p) +
                         ": F-purity depends on the equation";
            return out;
        }
    }
    out.kind = FKind::NotFPure;
    out.clause = "no F-pure case applies";
    return out;
}

std::vector<Int> cross_ratio_orbit(Int lambda, Int p) {
    Fp f(p);
    const Int mu = f.norm(-lambda);
    const Int one = 1 % p;
    std::vector<Int> imgs = {mu, f.inv(mu), f.sub(one, mu), f.inv(f.sub(one, mu)), f.mul(mu, f.inv(f.sub(mu, one))),
                             f.mul(f.sub(mu, one), f.inv(mu))};
    std::set<Int> out;
    for (auto v : imgs) out.insert(f.norm(-v));
    return {out.begin(), out.end()};
}

std::vector<ModuliOrbit> moduli_family_report(const DualGraph& g, Int p) {
    require_prime(p);
    if (p == 2) throw Error("the moduli report needs an odd characteristic");
    auto shape = classify_shape(g);
    const auto* st = std::get_if<StarShape>(&shape);
    if (!st || !type_is(st->data, {2, 2, 2, 2})) throw Error("graph is not a star of type (2,2,2,2)");
    std::set<Int> done;
    std::vector<ModuliOrbit> out;
    for (Int l = 1; l < p - 1; ++l) {
        if (done.count(l) || hasse_sum(l, p) == 0) continue;
        ModuliOrbit orb;
        for (auto v : cross_ratio_orbit(l, p))
            if (hasse_sum(v, p) != 0) orb.members.push_back(v);
        orb.representative = orb.members.front();
        done.insert(orb.members.begin(), orb.members.end());
        out.push_back(std::move(orb));
    }
    return out;
}

}  // namespace singtaut
