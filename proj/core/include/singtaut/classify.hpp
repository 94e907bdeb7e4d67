#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singtaut/graph.hpp"

namespace singtaut {

/// Position of the fourth point on the central curve, normalised so the
/// other three sit at 0, -1 and infinity. Lives in F_p.
class CrossRatio {
public:
    /// Throws Error if lambda is 0 or -1 modulo p.
    CrossRatio(Int lambda, Int p);
    Int value() const { return value_; }
    Int p() const { return p_; }

private:
    Int value_;
    Int p_;
};

enum class FKind { FRegular, FPureNonRDP, RDPEquationDependent, NotFPure, NotApplicable };

enum class PureCase { None, Type333, Type236, Type244, Type2222, DTilde };

struct FClassification {
    FKind kind = FKind::NotApplicable;
    PureCase pure_case = PureCase::None;
    /// Set for Type2222.
    std::optional<Int> lambda;
    /// ADE label such as "E8" or "D6" for RDPEquationDependent.
    std::string family;
    std::vector<Int> allowed_p;
    /// Human-readable rule that produced the verdict.
    std::string clause;

    bool operator==(const FClassification&) const = default;
};

std::string to_string(FKind k);
std::string to_string(PureCase c);

/// Sum_{k=0}^{m} C(m,k)^2 (-lambda)^k mod p with m = (p-1)/2, for any lambda.
Int hasse_sum(Int lambda, Int p);

/// Condition for the (2,2,2,2) family; throws Error when p = 2.
bool condition_star(const CrossRatio& lambda, Int p);

/// Throws Error unless the graph is connected, negative definite and rational.
void require_rational(const DualGraph& g);

/// F-regularity from the graph and characteristic alone.
bool hara_f_regular(const DualGraph& g, Int p);

/// F-purity classification; `lambda` is required for type (2,2,2,2).
FClassification hara_f_pure(const DualGraph& g, Int p, const std::optional<CrossRatio>& lambda = std::nullopt);

/// "A<n>", "D<n>", "E6", "E7" or "E8" for an all -2, genus 0 Dynkin graph.
std::optional<std::string> recognize_ade(const DualGraph& g);

/// Chain C_1..C_n (n >= 2) whose two ends each carry exactly two leaves.
struct DTildeData {
    Int n = 0;
    /// Chain vertices from the end carrying the smaller-index leaf pair.
    std::vector<std::size_t> chain;
    /// Leaves on chain.front() and chain.back(), ascending index.
    std::vector<std::size_t> left_leaves;
    std::vector<std::size_t> right_leaves;
};

std::optional<DTildeData> recognize_dtilde(const DualGraph& g);

struct ModuliOrbit {
    Int representative = 0;
    std::vector<Int> members;

    bool operator==(const ModuliOrbit&) const = default;
};

/// Orbits of lambda in F_p minus {0, -1} passing the Hasse condition, under
/// the six cross-ratio substitutions. Throws Error unless the graph is a
/// (2,2,2,2) star and p is odd.
std::vector<ModuliOrbit> moduli_family_report(const DualGraph& g, Int p);

/// Orbit of a single lambda under the cross-ratio substitutions.
std::vector<Int> cross_ratio_orbit(Int lambda, Int p);

}  // namespace singtaut
