#pragma once

#include <array>
#include <optional>
#include <string>

#include "singtaut/cycle.hpp"
#include "singtaut/graph.hpp"

namespace singtaut {

enum class CechModel { Star, Chain, DTilde };
std::string to_string(CechModel m);

struct CechResult {
    /// Dimension of the inner window modulo coboundaries, summed over slices.
    Int rank = 0;
    /// Same count with both window sizes doubled.
    Int rank_doubled = 0;
    bool stable = false;
    CechModel model = CechModel::Star;
    Int slices = 0;
    Int window_s = 0;
    Int window_r = 0;

    bool operator==(const CechResult&) const = default;
};

/// Finite-window Cech computation of H^1 of the tangent sheaf of the
/// thickened exceptional divisor, sliced by y-degree.
///
/// Chains, three-branch stars and D-tilde graphs are supported; anything else
/// throws Error. S is the monomial window and R the pole order window; both
/// must be at least 2. A class counts when it lies in the inner half of the
/// window and is independent of every coboundary that fits in the window.
CechResult cech_h1_rank(const DualGraph& g, Int p, Int S = 64, Int R = 8,
                        const std::optional<CycleVec>& z_tilde = std::nullopt,
                        const std::optional<std::array<std::size_t, 3>>& order = std::nullopt);

}  // namespace singtaut
