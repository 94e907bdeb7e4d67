#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "singtaut/singtaut.hpp"

namespace singtaut::test {

inline DualGraph load_data_graph(const std::string& name) {
    std::ifstream in(std::string(SINGTAUT_DATA_DIR) + "/" + name, std::ios::binary);
    if (!in) throw Error("missing test graph " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

inline DualGraph e8_graph() { return load_data_graph("e8.sdg"); }
inline DualGraph dtilde_graph() { return load_data_graph("dtilde.sdg"); }

/// Chain v0 - v1 - ... with the given weights.
inline DualGraph chain_graph(const std::vector<Int>& bs) {
    DualGraph g;
    for (std::size_t i = 0; i < bs.size(); ++i) g.add_vertex({"v" + std::to_string(i), 0, bs[i]});
    for (std::size_t i = 1; i < bs.size(); ++i) g.add_edge_index(i - 1, i);
    return g;
}

/// Centre weight b0 with branches listed centre-outward.
inline DualGraph star_graph(Int b0, const std::vector<std::vector<Int>>& branches) {
    DualGraph g;
    g.add_vertex({"c", 0, b0});
    for (std::size_t i = 0; i < branches.size(); ++i) {
        std::size_t prev = 0;
        for (std::size_t j = 0; j < branches[i].size(); ++j) {
            const auto v = g.add_vertex({"b" + std::to_string(i) + "_" + std::to_string(j), 0, branches[i][j]});
            g.add_edge_index(prev, v);
            prev = v;
        }
    }
    return g;
}

inline const StarData& star_of(const GraphShape& s) { return std::get<StarShape>(s).data; }

}  // namespace singtaut::test
