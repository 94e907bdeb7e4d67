#pragma once

#include <array>
#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "singtaut/cycle.hpp"
#include "singtaut/graph.hpp"

namespace singtaut {

using Rational = boost::rational<Int>;

Int floor_of(const Rational& q);
Int ceil_of(const Rational& q);
std::string to_string(const Rational& q);

/// Branch slopes, multiplicities and gates of a three-branch star.
struct StarCohomologyData {
    /// Branch data in the order used by the calculus (1, 2, 3).
    std::array<Int, 3> alpha{1, 1, 1};
    std::array<Int, 3> beta{1, 1, 1};
    Int b0 = 2;
    Int alpha_prime = 0;
    /// Multiplicity of the central curve.
    Int nu0 = 0;
    /// Multiplicities of the first curve of each branch; kUncapped in slope-only models.
    std::array<Int, 3> nu_first{0, 0, 0};
    /// 0 when no characteristic is attached.
    Int p = 0;
    /// alpha_i is nonzero in F_p; all true when p = 0.
    std::array<bool, 3> gates{true, true, true};
    std::vector<Int> type_tuple;

    Rational q1() const { return {beta[0], alpha[0]}; }
    Rational q2() const { return {beta[1], alpha[1]}; }
    Rational q3() const { return {beta[2], alpha[2]}; }
    Rational qp() const { return {alpha_prime, alpha[2]}; }

    bool operator==(const StarCohomologyData&) const = default;
};

inline constexpr Int kUncapped = Int{1} << 40;

/// Slope-only model with uncapped multiplicities and no characteristic.
StarCohomologyData slope_model(Int a1, Int b1, Int a2, Int b2, Int a3, Int b3, Int b0);

/// Data for a concrete star. `order` permutes the canonically sorted branches.
/// Throws Error unless the graph is a star with exactly three branches.
StarCohomologyData star_cohomology_data(const DualGraph& g, Int p, const MultiplicityData& md,
                                        const std::optional<std::array<std::size_t, 3>>& order = std::nullopt);

enum class CoboundaryType { A, B, C, D, FAIL };
std::string to_string(CoboundaryType t);

struct CoboundaryTypeRow {
    Int t = 0;
    Int s_min = 0;
    std::optional<Int> r;
    std::optional<Int> s_minus_r;
    CoboundaryType type = CoboundaryType::FAIL;
    std::string note;

    bool operator==(const CoboundaryTypeRow&) const = default;
};

/// floor(qp t) + 1 >= q1 t + ceil(q2 t).
bool yterm_vanishing_check(const StarCohomologyData& d, Int t);

/// Same inequality with the U1 bound and the branch multiplicities taken into account.
bool yterm_capped_check(const StarCohomologyData& d, Int t);

/// First of A, B, C, D matching at s_min = floor(qp t) + 1.
CoboundaryTypeRow xterm_coboundary_type(const StarCohomologyData& d, Int t);

/// Re-checks a row against the defining rule of its type.
bool row_satisfies_rule(const StarCohomologyData& d, const CoboundaryTypeRow& row);

struct SweepStep {
    Int s = 0;
    CoboundaryType type = CoboundaryType::FAIL;
    Int r = 0;

    bool operator==(const SweepStep&) const = default;
};

/// Walks s upward from the first exponent not covered by U1 until a type A
/// coboundary applies, requiring B, C or D at every earlier s.
struct SweepResult {
    bool ok = false;
    Int t = 0;
    Int s_start = 0;
    std::vector<SweepStep> steps;
    std::string reason;

    bool operator==(const SweepResult&) const = default;
};

SweepResult xterm_sweep(const StarCohomologyData& d, Int t);

/// Lower bound c1 t + c0 for s_min - r_A - q1 t with uncapped data.
struct AnalyticTail {
    Rational c1;
    Rational c0;
    /// Smallest t from which c1 t + c0 >= 0; meaningless unless c1 > 0.
    Int threshold = 0;
    bool positive_slope = false;
};

AnalyticTail analytic_tail(const StarCohomologyData& d);

enum class TableId { Table1, Table2, Case236a, Case236b, Case244 };

std::optional<TableId> parse_table_id(const std::string& s);
std::string table_name(TableId id);
std::vector<CoboundaryTypeRow> reproduce_table(TableId id);

/// Tab-separated rows under the header `t  min{s}  r  min{s-r}  Type`.
std::string format_table(const std::vector<CoboundaryTypeRow>& rows);

}  // namespace singtaut
