#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "singtaut/classify.hpp"
#include "singtaut/cycle.hpp"

namespace singtaut {

using Matrix2 = std::array<std::array<Int, 2>, 2>;

/// Log-exponent matrix M of the chain: row 0 holds the exponents of x_n and
/// row 1 those of y_n in terms of (x_1, y_1), so x_n^a y_n^c = x_1^s y_1^t
/// with (s, t) = M^T (a, c).
Matrix2 dtilde_exponent_matrix(const DualGraph& g, const DTildeData& d);

struct FamilyAudit {
    std::string family;
    Int generators = 0;
    /// Generators on which the functional is nonzero.
    Int nonzero = 0;
    std::string argument;

    bool operator==(const FamilyAudit&) const = default;
};

/// Linear functional on the two overlaps that kills every coboundary but not
/// the class of x_n d/dx_n.
struct DTildeObstruction {
    Int p = 0;
    Matrix2 exponent_matrix{};
    /// XX_1 = D00 XX_n + D01 YY_n, YY_1 = D10 XX_n + D11 YY_n.
    Matrix2 direction_matrix{};
    std::vector<FamilyAudit> audits;
    /// Functional value on the target class, in [0, p).
    Int target_value = 0;
    bool holds = false;

    bool operator==(const DTildeObstruction&) const = default;
};

/// Nullopt when D10 is a unit mod p. Throws Error unless the graph is D-tilde.
/// The audit evaluates the functional on every generator fitting the window.
std::optional<DTildeObstruction> dtilde_obstruction(const DualGraph& g, Int p, const MultiplicityData& md,
                                                    Int S = 32, Int R = 8);

}  // namespace singtaut
