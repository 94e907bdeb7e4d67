#include "acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <boost/rational.hpp>

namespace singtaut {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Empty when equal, otherwise the differing lines.
std::string diff_text(const std::string& expected, const std::string& got) {
    if (expected == got) return {};
    const auto e = split_lines(expected), g = split_lines(got);
    std::ostringstream out;
    for (std::size_t i = 0; i < std::max(e.size(), g.size()); ++i) {
        const std::string a = i < e.size() ? e[i] : "<missing>";
        const std::string b = i < g.size() ? g[i] : "<missing>";
        if (a != b) out << "line " << i + 1 << ": golden '" << a << "' computed '" << b << "'; ";
    }
    if (out.str().empty()) out << "trailing bytes differ; ";
    return out.str();
}

std::string check_golden(const AcceptanceOptions& o, const std::string& file, TableId id) {
    const std::string got = format_table(reproduce_table(id));
    const std::string d = diff_text(read_file(o.golden_dir + "/" + file), got);
    return d.empty() ? std::string{} : file + ": " + d;
}

std::string types_of(const std::vector<CoboundaryTypeRow>& rows) {
    std::string s;
    for (const auto& r : rows) s += to_string(r.type);
    return s;
}

std::vector<std::vector<Int>> chains_upto(std::size_t max_len) {
    std::vector<std::vector<Int>> out, frontier{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Int>> next;
        for (const auto& c : frontier)
            for (Int b = 2; b <= 4; ++b) {
                auto d = c;
                d.push_back(b);
                next.push_back(d);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

CriterionResult table_criterion(int id, const std::string& name, const AcceptanceOptions& o, const std::string& file,
                                TableId table) {
    CriterionResult r{id, name, false, {}, 0};
    const auto start = Clock::now();
    const std::string d = check_golden(o, file, table);
    r.millis = millis_since(start);
    r.pass = d.empty() && r.millis < 1000;
    r.detail = d.empty() ? "byte-equal to " + file : d;
    if (r.millis >= 1000) r.detail += " runtime over 1 s";
    return r;
}

CriterionResult criterion_3(const AcceptanceOptions& o) {
    CriterionResult r{3, "special star tables", false, {}, 0};
    const auto start = Clock::now();
    std::string d = check_golden(o, "c236.txt", TableId::Case236a) + check_golden(o, "c236b.txt", TableId::Case236b) +
                    check_golden(o, "c244.txt", TableId::Case244);
    const std::array<std::pair<TableId, std::string>, 3> want{
        {{TableId::Case236a, "ABAAA"}, {TableId::Case236b, "ABC"}, {TableId::Case244, "ABA"}}};
    for (const auto& [id, types] : want) {
        const auto got = types_of(reproduce_table(id));
        if (got != types) d += table_name(id) + " types " + got + " expected " + types + "; ";
    }
    r.millis = millis_since(start);
    r.pass = d.empty();
    r.detail = d.empty() ? "c236 ABAAA, c236b ABC, c244 ABA" : d;
    return r;
}

CriterionResult criterion_4() {
    CriterionResult r{4, "RDP Fedder check", false, {}, 0};
    const auto start = Clock::now();
    std::size_t rows = 0;
    std::string bad;
    for (Int p : {2, 3, 5, 7})
        for (const auto& rec : rdp_catalog(p, 10)) {
            ++rows;
            if (fedder_is_f_pure(rec.equation) != rec.expected_f_pure)
                bad += rec.artin_type + " p=" + std::to_string(p) + "; ";
        }
    r.millis = millis_since(start);
    r.pass = bad.empty() && r.millis < 5000;
    r.detail = std::to_string(rows) + " catalog rows" + (bad.empty() ? "" : ", mismatches: " + bad);
    return r;
}

CriterionResult criterion_5() {
    CriterionResult r{5, "one F-pure type per graph", false, {}, 0};
    const auto start = Clock::now();
    std::string bad;
    std::size_t labels = 0;
    for (Int p : {2, 3, 5, 7}) {
        const auto rep = verify_f_pure_uniqueness(p, 10);
        labels += rep.rows.size();
        for (const auto& row : rep.rows)
            if (row.f_pure_types.size() != 1 || row.mismatches != 0)
                bad += row.graph_label + " p=" + std::to_string(p) + " has " +
                       std::to_string(row.f_pure_types.size()) + " F-pure types; ";
        if (!rep.pass && bad.empty()) bad += "report failed at p=" + std::to_string(p) + "; ";
    }
    r.millis = millis_since(start);
    r.pass = bad.empty();
    r.detail = std::to_string(labels) + " graph labels" + (bad.empty() ? "" : ", " + bad);
    return r;
}

CriterionResult criterion_6(const AcceptanceOptions& o) {
    CriterionResult r{6, "F-regular star sweep", false, {}, 0};
    const auto start = Clock::now();
    const auto corpus = f_regular_star_corpus();
    std::size_t cases = 0;
    std::string bad;
    std::vector<std::pair<std::size_t, Int>> small;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (Int p : {2, 3, 5, 7, 11, 13}) {
            if (!hara_f_regular(corpus[i].graph, p)) continue;
            ++cases;
            const auto v = taut_certificate(corpus[i].graph, p);
            if (v.kind != VerdictKind::Taut || v.method != VerdictMethod::H1Vanishes) {
                bad += corpus[i].name + " p=" + std::to_string(p) + ": " + to_string(v.kind) + " " + v.reason + "; ";
                continue;
            }
            if (v.slices <= 400) small.emplace_back(i, p);
        }
    std::mt19937_64 rng(o.seed);
    std::shuffle(small.begin(), small.end(), rng);
    if (small.size() > 5) small.resize(5);
    std::string sampled;
    for (auto [i, p] : small) {
        const auto c = cech_h1_rank(corpus[i].graph, p);
        sampled += corpus[i].name + "@" + std::to_string(p) + " rank " + std::to_string(c.rank) + "; ";
        if (c.rank != 0 || !c.stable)
            bad += "cech " + corpus[i].name + " p=" + std::to_string(p) + " rank " + std::to_string(c.rank) +
                   (c.stable ? "" : " unstable") + "; ";
    }
    if (small.size() < 5) bad += "fewer than 5 graphs available for the Cech sample; ";
    r.millis = millis_since(start);
    r.pass = bad.empty() && r.millis < 60000;
    r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(cases) + " (graph, p) cases; sampled " +
               sampled + bad;
    if (r.millis >= 60000) r.detail += " runtime over 60 s";
    return r;
}

CriterionResult criterion_7() {
    CriterionResult r{7, "D-tilde obstruction", false, {}, 0};
    const auto start = Clock::now();
    const auto g = dtilde_example_graph();
    const CycleVec zt{7, 5, 7, 4, 4, 4, 4};
    std::string bad;
    const auto md = multiplicity_data(g, 3, zt);
    const auto issues = validate_multiplicity(g, 3, md);
    if (!issues.empty()) bad += "multiplicity invariants: " + issues.front() + "; ";
    if (md.z != CycleVec{28, 20, 28, 16, 16, 16, 16}) bad += "z differs from (28,20,28,16,16,16,16); ";
    const auto ob = dtilde_obstruction(g, 3, md);
    if (!ob || !ob->holds) bad += "obstruction missing at p=3; ";
    const auto c = cech_h1_rank(g, 3, 32, 8, zt);
    if (c.rank < 1 || !c.stable)
        bad += "cech rank " + std::to_string(c.rank) + (c.stable ? "" : " unstable") + " at p=3; ";
    if (dtilde_obstruction(g, 7, multiplicity_data(g, 7))) bad += "obstruction present at p=7; ";
    r.millis = millis_since(start);
    r.pass = bad.empty();
    r.detail = bad.empty() ? "p=3 obstruction holds, cech rank " + std::to_string(c.rank) + " stable; p=7 none" : bad;
    return r;
}

// Laplace expansion along the first row.
Int laplace_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        acc += (c % 2 ? -1 : 1) * m[0][c] * laplace_det(minor);
    }
    return acc;
}

IntMatrix chain_matrix(const std::vector<Int>& bs) {
    IntMatrix m(bs.size(), std::vector<Int>(bs.size(), 0));
    for (std::size_t i = 0; i < bs.size(); ++i) {
        m[i][i] = bs[i];
        if (i + 1 < bs.size()) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return m;
}

std::string suite_branch_fraction(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<Int> weight(2, 7);
    for (int k = 0; k < 600; ++k) {
        std::vector<Int> bs(static_cast<std::size_t>(len(rng)));
        for (auto& b : bs) b = weight(rng);
        const auto [a, b] = branch_fraction(bs);
        const Int alpha = laplace_det(chain_matrix(bs));
        const Int beta = bs.size() == 1 ? 1 : laplace_det(chain_matrix({bs.begin() + 1, bs.end()}));
        if (a != alpha || b != beta) return "branch_fraction disagrees with the determinant oracle; ";
    }
    return {};
}

std::string suite_extremal_slopes() {
    std::vector<std::array<Int, 3>> types;
    for (Int d = 2; d <= 12; ++d) types.push_back({2, 2, d});
    types.push_back({2, 3, 3});
    types.push_back({2, 3, 4});
    types.push_back({2, 3, 5});
    for (const auto& ty : types) {
        const auto d = slope_model(ty[0], ty[0] - 1, ty[1], ty[1] - 1, ty[2], ty[2] - 1, 2);
        for (Int t = 0; t <= 10000; ++t) {
            if (!yterm_vanishing_check(d, t))
                return "vanishing inequality fails for (" + std::to_string(ty[0]) + "," + std::to_string(ty[1]) + "," +
                       std::to_string(ty[2]) + ") at t=" + std::to_string(t) + "; ";
            const auto row = xterm_coboundary_type(d, t);
            if (row.type == CoboundaryType::FAIL || !row_satisfies_rule(d, row))
                return "type search fails for (" + std::to_string(ty[0]) + "," + std::to_string(ty[1]) + "," +
                       std::to_string(ty[2]) + ") at t=" + std::to_string(t) + "; ";
        }
    }
    return {};
}

std::string suite_condition_star() {
    for (Int p = 3; p <= 31; p += 2) {
        if (!is_prime(p)) continue;
        const Int m = (p - 1) / 2;
        std::vector<std::vector<Int>> pascal(static_cast<std::size_t>(m + 1));
        for (Int n = 0; n <= m; ++n) {
            auto& row = pascal[static_cast<std::size_t>(n)];
            row.assign(static_cast<std::size_t>(n + 1), 1);
            for (Int k = 1; k < n; ++k)
                row[static_cast<std::size_t>(k)] =
                    (pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                     pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]) % p;
        }
        Int roots = 0;
        for (Int lambda = 1; lambda <= p - 2; ++lambda) {
            Int acc = 0, pw = 1;
            for (Int k = 0; k <= m; ++k) {
                const Int c = pascal[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
                acc = (acc + c * c % p * pw) % p;
                pw = pw * ((p - lambda) % p) % p;
            }
            if (acc != hasse_sum(lambda, p)) return "hasse_sum disagrees with the direct sum at p=" + std::to_string(p) + "; ";
            if (acc == 0) ++roots;
        }
        if (roots > m) return "too many roots of the Hasse sum at p=" + std::to_string(p) + "; ";
    }
    return {};
}

std::string suite_fedder_invariance(std::mt19937_64& rng) {
    for (Int p : {2, 3, 5}) {
        std::vector<FpPoly> polys;
        for (const auto& rec : rdp_catalog(p, 6)) polys.push_back(rec.equation);
        std::uniform_int_distribution<int> nterms(2, 5), ex(0, 4);
        std::uniform_int_distribution<Int> coef(1, p - 1);
        for (int k = 0; k < 60; ++k) {
            FpPoly f(p);
            for (int i = nterms(rng); i > 0; --i) {
                const Exponent e{ex(rng), ex(rng), ex(rng)};
                if (e != Exponent{0, 0, 0}) f.add_term(e, coef(rng));
            }
            if (f.is_zero()) continue;
            polys.push_back(f);
        }
        std::array<int, 3> perm{0, 1, 2};
        for (const auto& f : polys) {
            const bool base = fedder_is_f_pure(f);
            std::shuffle(perm.begin(), perm.end(), rng);
            if (fedder_is_f_pure(f.rescale(coef(rng), coef(rng), coef(rng))) != base ||
                fedder_is_f_pure(f.permute(perm)) != base)
                return "Fedder verdict changes under a coordinate change for " + f.to_string() + "; ";
        }
    }
    return {};
}

// Symmetric positive definite iff every elimination pivot is positive.
bool pivots_positive(const IntMatrix& m) {
    using Q = boost::rational<Int>;
    const std::size_t n = m.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(m[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= Q(0)) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Q f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

std::string suite_negative_definite(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_int_distribution<Int> weight(1, 4);
    for (int k = 0; k < 500; ++k) {
        DualGraph g;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) g.add_vertex({"v" + std::to_string(i), 0, weight(rng)});
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            g.add_edge_index(static_cast<std::size_t>(parent(rng)), static_cast<std::size_t>(i));
        }
        auto m = intersection_matrix(g);
        for (auto& row : m)
            for (auto& x : row) x = -x;
        if (is_negative_definite(intersection_matrix(g)) != pivots_positive(m))
            return "negative definiteness disagrees with the pivot oracle on " + format_graph(g) + "; ";
    }
    return {};
}

CriterionResult criterion_8(const AcceptanceOptions& o) {
    CriterionResult r{8, "property suites", false, {}, 0};
    const auto start = Clock::now();
    std::mt19937_64 rng(o.seed);
    const std::string bad = suite_branch_fraction(rng) + suite_extremal_slopes() + suite_condition_star() +
                            suite_fedder_invariance(rng) + suite_negative_definite(rng);
    r.millis = millis_since(start);
    r.pass = bad.empty();
    r.detail = bad.empty() ? "branch fractions, extremal slopes to t=10000, Hasse roots, Fedder invariance, "
                             "negative definiteness"
                           : bad;
    return r;
}

}  // namespace

DualGraph make_star(Int b0, const std::vector<std::vector<Int>>& branches) {
    DualGraph g;
    g.add_vertex({"c", 0, b0});
    for (std::size_t i = 0; i < branches.size(); ++i) {
        std::string prev = "c";
        for (std::size_t j = 0; j < branches[i].size(); ++j) {
            const std::string id = "b" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            g.add_vertex({id, 0, branches[i][j]});
            g.add_edge(prev, id);
            prev = id;
        }
    }
    return g;
}

DualGraph dtilde_example_graph() {
    DualGraph g;
    const std::array<Int, 7> b{2, 3, 2, 2, 2, 2, 2};
    for (std::size_t i = 0; i < b.size(); ++i) g.add_vertex({"E" + std::to_string(i + 1), 0, b[i]});
    g.add_edge("E1", "E2");
    g.add_edge("E2", "E3");
    g.add_edge("E1", "E4");
    g.add_edge("E1", "E5");
    g.add_edge("E3", "E6");
    g.add_edge("E3", "E7");
    return g;
}

std::vector<CorpusGraph> f_regular_star_corpus() {
    std::map<Int, std::vector<std::vector<Int>>> by_det;
    for (auto& c : chains_upto(7)) {
        const Int a = branch_fraction(c).first;
        if (a >= 2 && a <= 7) by_det[a].push_back(c);
    }
    std::vector<std::array<Int, 3>> types;
    for (Int d = 2; d <= 7; ++d) types.push_back({2, 2, d});
    types.push_back({2, 3, 3});
    types.push_back({2, 3, 4});
    types.push_back({2, 3, 5});

    std::vector<CorpusGraph> out;
    std::set<std::string> seen;
    for (const auto& ty : types) {
        const auto& c1 = by_det[ty[0]];
        const auto& c2 = by_det[ty[1]];
        const auto& c3 = by_det[ty[2]];
        for (std::size_t i = 0; i < c1.size(); ++i)
            for (std::size_t j = ty[1] == ty[0] ? i : 0; j < c2.size(); ++j)
                for (std::size_t k = ty[2] == ty[1] ? j : 0; k < c3.size(); ++k) {
                    if (1 + c1[i].size() + c2[j].size() + c3[k].size() > 10) continue;
                    for (Int b0 = 2; b0 <= 4; ++b0) {
                        auto g = make_star(b0, {c1[i], c2[j], c3[k]});
                        if (!is_negative_definite(intersection_matrix(g))) continue;
                        std::string name = "c" + std::to_string(b0);
                        for (const auto* br : {&c1[i], &c2[j], &c3[k]}) {
                            name += "[";
                            for (Int b : *br) name += std::to_string(b);
                            name += "]";
                        }
                        if (!seen.insert(name).second) continue;
                        out.push_back({name, std::move(g), {ty[0], ty[1], ty[2]}});
                    }
                }
    }
    return out;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& o) {
    try {
        switch (id) {
            case 1: return table_criterion(1, "coboundary types, slopes (1/2, 2/3, 5/4)", o, "table1.txt", TableId::Table1);
            case 2: return table_criterion(2, "coboundary types, slopes (1/2, 2/3, 6/5)", o, "table2.txt", TableId::Table2);
            case 3: return criterion_3(o);
            case 4: return criterion_4();
            case 5: return criterion_5();
            case 6: return criterion_6(o);
            case 7: return criterion_7();
            case 8: return criterion_8(o);
            default: break;
        }
    } catch (const std::exception& e) {
        return {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0};
    }
    throw Error("unknown criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, o));
    return out;
}

std::string format_result(const CriterionResult& r) {
    return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name + " (" +
           std::to_string(r.millis) + " ms): " + r.detail;
}

}  // namespace singtaut
