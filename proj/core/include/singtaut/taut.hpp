#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "singtaut/classify.hpp"
#include "singtaut/cycle.hpp"
#include "singtaut/dtilde.hpp"
#include "singtaut/star_cohomology.hpp"

namespace singtaut {

enum class VerdictKind { Taut, NotTautEvidence, ModuliFamily, Inconclusive };
enum class VerdictMethod { None, ChainRule, H1Vanishes, DTildeObstruction, CrossRatioModuli };

std::string to_string(VerdictKind k);
std::string to_string(VerdictMethod m);

/// One slice of the vanishing certificate.
struct CertificateRow {
    Int t = 0;
    bool y_ok = false;
    CoboundaryTypeRow x_row;
    SweepResult sweep;

    bool operator==(const CertificateRow&) const = default;
};

struct TautnessVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    VerdictMethod method = VerdictMethod::None;
    FClassification classification;
    std::vector<CertificateRow> rows;
    /// Last slice checked explicitly.
    Int t_checked = -1;
    /// Number of slices carrying sections.
    Int slices = 0;
    /// Analytic tail threshold; 0 when no tail was needed.
    Int threshold = 0;
    bool tail_used = false;
    std::vector<Int> type_tuple;
    std::optional<DTildeObstruction> obstruction;
    std::vector<ModuliOrbit> orbits;
    std::string reason;

    bool operator==(const TautnessVerdict&) const = default;
};

struct TautOptions {
    /// Cross ratio for (2,2,2,2) stars.
    std::optional<Int> lambda;
    /// Caps the explicitly checked slices; the analytic tail must cover the rest.
    std::optional<Int> t_max;
    std::optional<CycleVec> z_tilde;
    /// Permutation of the canonically sorted branches.
    std::optional<std::array<std::size_t, 3>> order;
};

/// Tautness verdict for a rational graph in characteristic p.
///
/// Chains are taut outright. F-regular three-branch stars and the F-pure
/// non-RDP types (3,3,3), (2,3,6), (2,4,4) are certified taut when every
/// slice of the tangent cohomology vanishes. (2,2,2,2) stars carry a cross
/// ratio modulus. D-tilde graphs report the obstruction functional when it
/// exists. Everything else is Inconclusive with a reason.
TautnessVerdict taut_certificate(const DualGraph& g, Int p, const TautOptions& options = {});

}  // namespace singtaut
