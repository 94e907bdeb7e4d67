#include "singtaut/cycle.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <sstream>

namespace singtaut {

namespace {

using Rat = boost::rational<Int>;

bool coprime_to(const CycleVec& z, Int p) {
    return std::all_of(z.begin(), z.end(), [p](Int c) { return c % p != 0; });
}

bool anti_ample(const IntMatrix& m, const CycleVec& z) {
    auto ze = intersect_all(m, z);
    return std::all_of(ze.begin(), ze.end(), [](Int v) { return v < 0; });
}

}  // namespace

std::map<std::string, Int> named_cycle(const DualGraph& g, const CycleVec& z) {
    std::map<std::string, Int> out;
    for (std::size_t i = 0; i < g.size(); ++i) out[g.vertex(i).id] = z.at(i);
    return out;
}

CycleVec parse_cycle(const DualGraph& g, const std::string& text) {
    CycleVec z(g.size(), 0);
    std::vector<bool> seen(g.size(), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("cycle entry '" + item + "' is not id=value");
        auto idx = g.index_of(item.substr(0, eq));
        if (!idx) throw Error("cycle entry names unknown vertex '" + item.substr(0, eq) + "'");
        if (seen[*idx]) throw Error("vertex '" + item.substr(0, eq) + "' assigned twice");
        try {
            std::size_t used = 0;
            z[*idx] = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw Error("bad integer");
        } catch (const std::exception&) {
            throw Error("cycle entry '" + item + "' has a non-integer value");
        }
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!seen[i]) throw Error("cycle does not assign vertex '" + g.vertex(i).id + "'");
    return z;
}

CycleVec anti_ample_seed(const DualGraph& g) {
    const auto m = intersection_matrix(g);
    if (g.size() == 0) throw Error("empty graph");
    if (!g.is_connected()) throw Error("graph is disconnected");
    if (!is_negative_definite(m)) throw Error("intersection matrix is not negative definite");
    const std::size_t n = g.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n] = Rat(-1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c].numerator() == 0) ++piv;
        std::swap(a[c], a[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].numerator() == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rat> v(n);
    Int lcd = 1;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = a[i][n] / a[i][i];
        if (v[i] <= 0) throw Error("anti-ample seed is not strictly positive");
        lcd = std::lcm(lcd, v[i].denominator());
    }
    CycleVec z(n);
    Int g_all = 0;
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = (v[i] * lcd).numerator();
        g_all = std::gcd(g_all, z[i]);
    }
    for (auto& c : z) c /= g_all;
    return z;
}

CycleVec anti_ample_cycle(const DualGraph& g, Int p) {
    require_prime(p);
    CycleVec z = anti_ample_seed(g);
    if (coprime_to(z, p)) return z;
    const auto m = intersection_matrix(g);
    const CycleVec zf = fundamental_cycle(g);
    CycleVec zf1 = zf;
    for (auto& c : zf1) ++c;
    const CycleVec ones(g.size(), 1);
    const CycleVec* pert = nullptr;
    for (const CycleVec* c : std::initializer_list<const CycleVec*>{&zf, &zf1, &ones})
        if (coprime_to(*c, p)) {
            pert = c;
            break;
        }
    CycleVec scaled = z;
    for (int k = 1; k <= 40; ++k) {
        for (auto& c : scaled) {
            if (c > std::numeric_limits<Int>::max() / p) throw Error("coprimality repair overflowed");
            c *= p;
        }
        CycleVec cand = scaled;
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] += (*pert)[i];
        if (anti_ample(m, cand) && coprime_to(cand, p)) return cand;
    }
    throw Error("coprimality repair failed to produce an anti-ample cycle");
}

std::vector<std::size_t> computation_sequence(const DualGraph& g, const CycleVec& z_tilde) {
    const auto m = intersection_matrix(g);
    CycleVec cur(g.size(), 0);
    std::vector<std::size_t> seq;
    for (;;) {
        auto ze = intersect_all(m, cur);
        std::optional<std::size_t> best;
        // Least filled component first (cur/z_tilde), then the smallest Z.E_i.
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (cur[i] >= z_tilde[i]) continue;
            if (!best) {
                best = i;
                continue;
            }
            const Int lhs = cur[i] * z_tilde[*best], rhs = cur[*best] * z_tilde[i];
            if (lhs < rhs || (lhs == rhs && ze[i] < ze[*best])) best = i;
        }
        if (!best) return seq;
        seq.push_back(*best);
        ++cur[*best];
    }
}

MultiplicityData significant_multiplicity(const DualGraph& g, Int p, const CycleVec& z_tilde,
                                          const std::vector<std::size_t>& sequence) {
    require_prime(p);
    const auto m = intersection_matrix(g);
    MultiplicityData md;
    md.z_tilde = z_tilde;
    md.sequence = sequence;
    CycleVec cur(g.size(), 0);
    bool first = true;
    for (auto i : sequence) {
        Int v = 0;
        for (std::size_t j = 0; j < g.size(); ++j) v += m[i][j] * cur[j];
        md.tau = first ? v : std::max(md.tau, v);
        first = false;
        ++cur[i];
    }
    if (cur != z_tilde) throw Error("sequence does not sum to the anti-ample cycle");
    if (md.tau < 1) throw Error("tau = " + std::to_string(md.tau) + " < 1; at least two curves are required");
    for (const auto& v : g.vertices())
        md.lambda_weight = std::max({md.lambda_weight, 2 * (2 * v.genus - 2), 2 * v.genus - 2 + v.b});
    md.nu = md.tau + md.lambda_weight + 1;
    while (md.nu % p == 0) ++md.nu;
    md.z = z_tilde;
    for (auto& c : md.z) c *= md.nu;
    if (!coprime_to(md.z, p)) throw Error("p divides a coefficient of nu * z_tilde");
    return md;
}

std::vector<std::string> validate_multiplicity(const DualGraph& g, Int p, const MultiplicityData& md) {
    std::vector<std::string> bad;
    const auto m = intersection_matrix(g);
    if (md.z_tilde.size() != g.size()) return {"cycle has wrong length"};
    if (!anti_ample(m, md.z_tilde)) bad.emplace_back("z_tilde is not anti-ample");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (md.z_tilde[i] <= 0) bad.push_back("z_tilde coefficient of " + g.vertex(i).id + " is not positive");
        else if (md.z_tilde[i] % p == 0) bad.push_back("p divides z_tilde coefficient of " + g.vertex(i).id);
    }
    if (md.tau < 1) bad.emplace_back("tau < 1");
    if (md.nu < md.tau + md.lambda_weight + 1) bad.emplace_back("nu below tau + lambda + 1");
    if (md.nu % p == 0) bad.emplace_back("p divides nu");
    for (Int v = md.tau + md.lambda_weight + 1; v < md.nu; ++v)
        if (v % p != 0) {
            bad.emplace_back("nu is not minimal");
            break;
        }
    for (std::size_t i = 0; i < g.size(); ++i)
        if (md.z.size() != g.size() || md.z[i] != md.nu * md.z_tilde[i]) {
            bad.emplace_back("z differs from nu * z_tilde");
            break;
        }
    for (auto c : md.z)
        if (c % p == 0) {
            bad.emplace_back("p divides a coefficient of z");
            break;
        }
    return bad;
}

MultiplicityData multiplicity_data(const DualGraph& g, Int p, const std::optional<CycleVec>& override_z_tilde) {
    CycleVec zt = override_z_tilde ? *override_z_tilde : anti_ample_cycle(g, p);
    if (override_z_tilde) {
        const auto m = intersection_matrix(g);
        if (zt.size() != g.size()) throw Error("override cycle has wrong length");
        if (!anti_ample(m, zt)) throw Error("override cycle is not anti-ample");
        if (!coprime_to(zt, p)) throw Error("p divides a coefficient of the override cycle");
        if (std::any_of(zt.begin(), zt.end(), [](Int c) { return c <= 0; }))
            throw Error("override cycle has a nonpositive coefficient");
    }
    auto md = significant_multiplicity(g, p, zt, computation_sequence(g, zt));
    auto bad = validate_multiplicity(g, p, md);
    if (!bad.empty()) throw Error("multiplicity data invalid: " + bad.front());
    return md;
}

}  // namespace singtaut
