#include "singtaut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace singtaut {

__extension__ using Wide = __int128;

std::size_t DualGraph::add_vertex(Vertex v) {
    if (v.b < 1) throw Error("vertex '" + v.id + "': b must be positive");
    if (v.genus < 0) throw Error("vertex '" + v.id + "': genus must be nonnegative");
    if (index_of(v.id)) throw Error("duplicate vertex id '" + v.id + "'");
    vertices_.push_back(std::move(v));
    return vertices_.size() - 1;
}

void DualGraph::add_edge(const std::string& a, const std::string& b) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia) throw Error("edge references unknown vertex '" + a + "'");
    if (!ib) throw Error("edge references unknown vertex '" + b + "'");
    add_edge_index(*ia, *ib);
}

void DualGraph::add_edge_index(std::size_t a, std::size_t b) {
    if (a >= size() || b >= size()) throw Error("edge index out of range");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
}

std::optional<std::size_t> DualGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    return std::nullopt;
}

std::vector<Int> DualGraph::degrees() const {
    std::vector<Int> d(size(), 0);
    for (auto [a, b] : edges_) {
        ++d[a];
        ++d[b];
    }
    return d;
}

std::vector<std::size_t> DualGraph::neighbours(std::size_t i) const {
    std::vector<std::size_t> out;
    for (auto [a, b] : edges_) {
        if (a == b) continue;
        if (a == i) out.push_back(b);
        if (b == i) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int DualGraph::edge_multiplicity(std::size_t a, std::size_t b) const {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    return std::count(edges_.begin(), edges_.end(), key);
}

bool DualGraph::has_loop_edge() const {
    return std::any_of(edges_.begin(), edges_.end(), [](auto e) { return e.first == e.second; });
}

bool DualGraph::is_connected() const {
    if (size() <= 1) return true;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : neighbours(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == size();
}

bool DualGraph::is_tree() const {
    return is_connected() && edges_.size() + 1 == size();
}

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string format_graph(const DualGraph& g) {
    std::string out;
    for (const auto& v : g.vertices()) {
        out += "vertex " + v.id + " b=" + std::to_string(v.b);
        if (v.genus != 0) out += " genus=" + std::to_string(v.genus);
        out += "\n";
    }
    for (auto [a, b] : g.edges()) out += "edge " + g.vertex(a).id + " " + g.vertex(b).id + "\n";
    return out;
}

IntMatrix intersection_matrix(const DualGraph& g) {
    const std::size_t n = g.size();
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -g.vertex(i).b;
    for (auto [a, b] : g.edges()) {
        if (a == b) {
            m[a][a] += 2;
        } else {
            ++m[a][b];
            ++m[b][a];
        }
    }
    return m;
}

Int determinant(const IntMatrix& input) {
    const std::size_t n = input.size();
    if (n == 0) return 1;
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = input[i][j];
    Wide prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<Int>(sign * a[n - 1][n - 1]);
}

bool is_negative_definite(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix minor(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = -m[i][j];
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

std::pair<Int, Int> branch_fraction(const std::vector<Int>& bs) {
    if (bs.empty()) throw Error("empty branch profile");
    // Evaluate from the outer end: value = num/den of b_j - 1/(value of the tail).
    Int num = bs.back(), den = 1;
    for (std::size_t k = bs.size() - 1; k-- > 0;) {
        if (num == 0) throw Error("degenerate branch profile: zero denominator in continued fraction");
        Int nn = bs[k] * num - den;
        den = num;
        num = nn;
    }
    Int g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

BranchProfile make_branch(std::vector<Int> bs, std::vector<std::size_t> vertices) {
    BranchProfile p;
    auto [a, b] = branch_fraction(bs);
    p.bs = std::move(bs);
    p.alpha = a;
    p.beta = b;
    p.vertices = std::move(vertices);
    return p;
}

StarData star_data(const DualGraph& g, std::size_t center) {
    StarData s;
    s.center = center;
    s.center_id = g.vertex(center).id;
    s.b0 = g.vertex(center).b;
    for (auto start : g.neighbours(center)) {
        std::vector<std::size_t> path{start};
        std::size_t prev = center, cur = start;
        for (;;) {
            std::size_t next = g.size();
            for (auto w : g.neighbours(cur))
                if (w != prev) next = w;
            if (next == g.size()) break;
            if (next == center) throw Error("branch returns to the centre");
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        std::vector<Int> bs;
        for (auto v : path) bs.push_back(g.vertex(v).b);
        s.branches.push_back(make_branch(std::move(bs), std::move(path)));
    }
    std::sort(s.branches.begin(), s.branches.end(), [](const BranchProfile& a, const BranchProfile& b) {
        return std::tie(a.alpha, a.bs, a.vertices.front()) < std::tie(b.alpha, b.bs, b.vertices.front());
    });
    for (const auto& br : s.branches) s.type_tuple.push_back(br.alpha);
    if (s.branches.size() == 3) s.alpha_prime = s.b0 * s.branches[2].alpha - s.branches[2].beta;
    return s;
}

GraphShape classify_shape(const DualGraph& g) {
    if (g.size() == 0) return EmptyShape{};
    if (!g.is_connected()) throw Error("graph is disconnected");
    if (g.has_loop_edge()) return OtherShape{"loop"};
    if (!g.is_tree()) return OtherShape{"cycle"};
    const auto deg = g.degrees();
    std::vector<std::size_t> centers;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (deg[i] >= 3) centers.push_back(i);
    if (centers.empty()) {
        ChainShape c;
        std::size_t start = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (deg[i] <= 1) {
                start = i;
                break;
            }
        std::size_t prev = g.size(), cur = start;
        while (true) {
            c.order.push_back(cur);
            std::size_t next = g.size();
            for (auto w : g.neighbours(cur))
                if (w != prev) next = w;
            if (next == g.size()) break;
            prev = cur;
            cur = next;
        }
        return c;
    }
    if (centers.size() > 1) return OtherShape{centers.size() == 2 ? "two centers" : "more than one center"};
    return StarShape{star_data(g, centers.front())};
}

bool is_potentially_taut(const DualGraph& g) {
    const auto deg = g.degrees();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertex(i).genus != 0 || deg[i] > 3) return false;
    return true;
}

std::vector<Int> intersect_all(const IntMatrix& m, const CycleVec& z) {
    std::vector<Int> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * z[j];
    return out;
}

Int intersect(const IntMatrix& m, const CycleVec& a, const CycleVec& b) {
    auto ma = intersect_all(m, a);
    Int s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += ma[i] * b[i];
    return s;
}

CycleVec fundamental_cycle(const DualGraph& g) {
    if (g.size() == 0) throw Error("empty graph has no fundamental cycle");
    if (!g.is_connected()) throw Error("graph is disconnected");
    const auto m = intersection_matrix(g);
    if (!is_negative_definite(m)) throw Error("intersection matrix is not negative definite");
    CycleVec z(g.size(), 1);
    for (;;) {
        auto ze = intersect_all(m, z);
        auto it = std::find_if(ze.begin(), ze.end(), [](Int v) { return v > 0; });
        if (it == ze.end()) return z;
        ++z[static_cast<std::size_t>(it - ze.begin())];
    }
}

Int arithmetic_genus(const DualGraph& g, const CycleVec& z) {
    const auto m = intersection_matrix(g);
    Int zz = intersect(m, z, z);
    Int kz = 0;
    for (std::size_t i = 0; i < g.size(); ++i) kz += (g.vertex(i).b - 2 + 2 * g.vertex(i).genus) * z[i];
    return 1 + (zz + kz) / 2;
}

bool is_rational_graph(const DualGraph& g) {
    return arithmetic_genus(g, fundamental_cycle(g)) == 0;
}

}  // namespace singtaut
