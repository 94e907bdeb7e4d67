#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "singtaut/modp.hpp"

namespace singtaut {

using Int = std::int64_t;
using IntMatrix = std::vector<std::vector<Int>>;

/// One exceptional curve: genus and self-intersection -b.
struct Vertex {
    std::string id;
    Int genus = 0;
    Int b = 2;

    bool operator==(const Vertex&) const = default;
};

/// Weighted dual graph; edges are a multiset of index pairs (loops allowed).
class DualGraph {
public:
    DualGraph() = default;

    /// Appends a vertex; throws Error on a duplicate id, b < 1 or genus < 0.
    std::size_t add_vertex(Vertex v);
    /// Adds one edge; throws Error if either id is unknown.
    void add_edge(const std::string& a, const std::string& b);
    void add_edge_index(std::size_t a, std::size_t b);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::optional<std::size_t> index_of(const std::string& id) const;

    /// Edge-endpoint count per vertex; a loop contributes two.
    std::vector<Int> degrees() const;
    /// Distinct neighbours (loops excluded), ascending.
    std::vector<std::size_t> neighbours(std::size_t i) const;
    Int edge_multiplicity(std::size_t a, std::size_t b) const;
    bool has_loop_edge() const;
    bool is_connected() const;
    /// True when connected and acyclic as a multigraph.
    bool is_tree() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Parse failure with 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Reads the line-oriented graph format:
/// `vertex <id> b=<uint> [genus=<uint>]`, `edge <id> <id>`, `#` comments.
DualGraph parse_graph(const std::string& text);

/// Writes `g` back in the graph format, one edge line per multiplicity.
std::string format_graph(const DualGraph& g);

/// M_ii = -b_i; M_ij = number of edges between i and j (a loop adds 2 to M_ii).
IntMatrix intersection_matrix(const DualGraph& g);

/// Exact determinant by fraction-free elimination.
Int determinant(const IntMatrix& m);

/// All leading principal minors of -M are positive.
bool is_negative_definite(const IntMatrix& m);

/// Self-intersection magnitudes of one branch, listed centre-outward.
struct BranchProfile {
    std::vector<Int> bs;
    Int alpha = 1;
    Int beta = 1;
    /// Graph indices of the branch vertices, centre-outward.
    std::vector<std::size_t> vertices;

    bool operator==(const BranchProfile&) const = default;
};

/// Continued fraction b1 - 1/(b2 - ...) in lowest terms.
/// Throws Error on a zero denominator.
std::pair<Int, Int> branch_fraction(const std::vector<Int>& bs);

/// Builds a profile with alpha and beta filled in.
BranchProfile make_branch(std::vector<Int> bs, std::vector<std::size_t> vertices = {});

struct StarData {
    std::size_t center = 0;
    std::string center_id;
    Int b0 = 2;
    /// Sorted by (alpha, bs, first vertex index).
    std::vector<BranchProfile> branches;
    std::vector<Int> type_tuple;
    /// b0 * alpha_3 - beta_3; only meaningful with exactly three branches.
    Int alpha_prime = 0;

    bool operator==(const StarData&) const = default;
};

struct EmptyShape {
    bool operator==(const EmptyShape&) const = default;
};
struct ChainShape {
    /// Vertex indices from the smaller-index endpoint.
    std::vector<std::size_t> order;
    bool operator==(const ChainShape&) const = default;
};
struct StarShape {
    StarData data;
    bool operator==(const StarShape&) const = default;
};
struct OtherShape {
    std::string reason;
    bool operator==(const OtherShape&) const = default;
};
using GraphShape = std::variant<EmptyShape, ChainShape, StarShape, OtherShape>;

/// Throws Error on a disconnected graph.
GraphShape classify_shape(const DualGraph& g);

/// StarData for the given centre with branches in the canonical order.
StarData star_data(const DualGraph& g, std::size_t center);

/// All genera zero and every vertex has at most three edge endpoints.
bool is_potentially_taut(const DualGraph& g);

/// Integer cycle indexed like the graph's vertices.
using CycleVec = std::vector<Int>;

/// Z . E_i for every i.
std::vector<Int> intersect_all(const IntMatrix& m, const CycleVec& z);
Int intersect(const IntMatrix& m, const CycleVec& a, const CycleVec& b);

/// Laufer's sequence from the reduced sum of all curves, smallest index first.
/// Throws Error if the graph is disconnected or not negative definite.
CycleVec fundamental_cycle(const DualGraph& g);

/// 1 + (Z.Z + K.Z)/2 with K.E_i = b_i - 2 + 2 genus_i.
Int arithmetic_genus(const DualGraph& g, const CycleVec& z);

/// Artin's test: the fundamental cycle has arithmetic genus zero.
bool is_rational_graph(const DualGraph& g);

}  // namespace singtaut
