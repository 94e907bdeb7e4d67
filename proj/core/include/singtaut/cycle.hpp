#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singtaut/graph.hpp"

namespace singtaut {

/// Multiplicity data of the thickened exceptional divisor.
struct MultiplicityData {
    CycleVec z_tilde;
    /// Vertex indices realising 0 = Z_0 < Z_1 < ... < Z_m = z_tilde.
    std::vector<std::size_t> sequence;
    Int tau = 0;
    Int lambda_weight = 0;
    Int nu = 0;
    /// nu * z_tilde.
    CycleVec z;

    bool operator==(const MultiplicityData&) const = default;
};

/// Named view of a cycle, keyed by vertex id.
std::map<std::string, Int> named_cycle(const DualGraph& g, const CycleVec& z);

/// Reads `a=7,b=5,...`; every vertex must be assigned exactly once.
CycleVec parse_cycle(const DualGraph& g, const std::string& text);

/// Strictly positive solution of M v = -1 scaled to a primitive integer cycle.
CycleVec anti_ample_seed(const DualGraph& g);

/// Anti-ample cycle with every coefficient prime to p.
///
/// Starts from anti_ample_seed; if p divides a coefficient, replaces Z by
/// p^k Z + D for the first D among {Z_f, Z_f + 1, 1} prime to p and the
/// least k keeping Z.E_i < 0.
CycleVec anti_ample_cycle(const DualGraph& g, Int p);

/// Greedy sequence: each step adds the component with the smallest fill ratio
/// Z_k[i] / z_tilde[i], then the smallest Z_k.E_i, then the smallest index.
std::vector<std::size_t> computation_sequence(const DualGraph& g, const CycleVec& z_tilde);

/// tau, lambda_weight, nu and z for a given anti-ample cycle and sequence.
/// Throws Error if tau < 1 or p divides a coefficient of z.
MultiplicityData significant_multiplicity(const DualGraph& g, Int p, const CycleVec& z_tilde,
                                          const std::vector<std::size_t>& sequence);

/// Empty when `md` satisfies every invariant, else one message per violation.
std::vector<std::string> validate_multiplicity(const DualGraph& g, Int p, const MultiplicityData& md);

/// Full pipeline; `override_z_tilde` replaces the computed anti-ample cycle
/// after validation.
MultiplicityData multiplicity_data(const DualGraph& g, Int p,
                                   const std::optional<CycleVec>& override_z_tilde = std::nullopt);

}  // namespace singtaut
