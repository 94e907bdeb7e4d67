#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singtaut/singtaut.hpp"

namespace singtaut {

/// A three-branch star from the F-regular sweep.
struct CorpusGraph {
    std::string name;
    DualGraph graph;
    std::vector<Int> type_tuple;
};

/// Star graphs of types (2,2,d) with d <= 7, (2,3,3), (2,3,4) and (2,3,5),
/// every curve weight in [2, 4], at most 10 curves, negative definite.
/// Branches of equal type appear once per unordered pair.
std::vector<CorpusGraph> f_regular_star_corpus();

/// Star graph with centre weight b0 and the given branch chains, listed
/// from the centre outwards.
DualGraph make_star(Int b0, const std::vector<std::vector<Int>>& branches);

/// The seven-curve D-tilde graph: chain weights (2, 3, 2), four leaves of weight 2.
DualGraph dtilde_example_graph();

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::int64_t millis = 0;
};

struct AcceptanceOptions {
    /// Directory holding table1.txt, table2.txt, c236.txt, c236b.txt, c244.txt.
    std::string golden_dir;
    std::uint64_t seed = 20240601;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS  3  name (12 ms): detail"
std::string format_result(const CriterionResult& r);

}  // namespace singtaut
