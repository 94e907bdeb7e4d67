#include "singtaut/taut.hpp"

#include <algorithm>

namespace singtaut {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Taut: return "Taut";
        case VerdictKind::NotTautEvidence: return "NotTautEvidence";
        case VerdictKind::ModuliFamily: return "ModuliFamily";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(VerdictMethod m) {
    switch (m) {
        case VerdictMethod::None: return "None";
        case VerdictMethod::ChainRule: return "ChainRule";
        case VerdictMethod::H1Vanishes: return "H1Vanishes";
        case VerdictMethod::DTildeObstruction: return "DTildeObstruction";
        case VerdictMethod::CrossRatioModuli: return "CrossRatioModuli";
    }
    return "?";
}

namespace {

TautnessVerdict inconclusive(TautnessVerdict v, std::string reason) {
    v.kind = VerdictKind::Inconclusive;
    v.method = VerdictMethod::None;
    v.reason = std::move(reason);
    return v;
}

bool certified_star_case(const FClassification& c) {
    if (c.kind == FKind::FRegular) return true;
    return c.kind == FKind::FPureNonRDP &&
           (c.pure_case == PureCase::Type333 || c.pure_case == PureCase::Type236 || c.pure_case == PureCase::Type244);
}

TautnessVerdict star_certificate(TautnessVerdict v, const DualGraph& g, Int p, const TautOptions& opt) {
    const auto md = multiplicity_data(g, p, opt.z_tilde);
    const auto d = star_cohomology_data(g, p, md, opt.order);
    v.type_tuple = d.type_tuple;
    if (!(d.alpha[0] <= d.alpha[1] && d.alpha[1] <= d.alpha[2]))
        return inconclusive(v, "branch order must keep the branch types ascending");
    v.slices = d.nu0;
    Int last = d.nu0 - 1;
    if (opt.t_max) {
        if (*opt.t_max < 0) throw Error("t_max must be nonnegative");
        last = std::min(last, *opt.t_max);
    }
    if (last < d.nu0 - 1) {
        const auto tail = analytic_tail(d);
        if (!tail.positive_slope) return inconclusive(v, "analytic tail has nonpositive slope");
        v.threshold = tail.threshold;
        v.tail_used = true;
        if (last + 1 < tail.threshold)
            return inconclusive(v, "checked range ends at t = " + std::to_string(last) + ", below the tail threshold " +
                                       std::to_string(tail.threshold));
    }
    v.t_checked = last;
    for (Int t = 0; t <= last; ++t) {
        CertificateRow row;
        row.t = t;
        row.y_ok = yterm_vanishing_check(d, t) || yterm_capped_check(d, t);
        row.x_row = xterm_coboundary_type(d, t);
        row.sweep = xterm_sweep(d, t);
        const bool ok = row.y_ok && row.sweep.ok;
        v.rows.push_back(std::move(row));
        if (!ok) {
            const auto& r = v.rows.back();
            return inconclusive(v, r.y_ok ? r.sweep.reason : "y-term not covered at t = " + std::to_string(t));
        }
    }
    v.kind = VerdictKind::Taut;
    v.method = VerdictMethod::H1Vanishes;
    return v;
}

}  // namespace

TautnessVerdict taut_certificate(const DualGraph& g, Int p, const TautOptions& opt) {
    require_prime(p);
    TautnessVerdict v;
    try {
        require_rational(g);
    } catch (const Error& e) {
        return inconclusive(v, e.what());
    }
    const auto shape = classify_shape(g);
    if (std::holds_alternative<ChainShape>(shape)) {
        v.kind = VerdictKind::Taut;
        v.method = VerdictMethod::ChainRule;
        v.reason = "cyclic quotient: every chain is taut";
        return v;
    }
    if (const auto* st = std::get_if<StarShape>(&shape);
        st && st->data.type_tuple == std::vector<Int>{2, 2, 2, 2}) {
        v.type_tuple = st->data.type_tuple;
        v.kind = VerdictKind::ModuliFamily;
        v.method = VerdictMethod::CrossRatioModuli;
        v.reason = "the position of the fourth branch point is a modulus";
        if (p != 2) v.orbits = moduli_family_report(g, p);
        if (opt.lambda) v.classification = hara_f_pure(g, p, CrossRatio(*opt.lambda, p));
        return v;
    }
    if (!is_potentially_taut(g)) return inconclusive(v, "a curve has positive genus or more than three neighbours");
    v.classification = hara_f_pure(g, p);
    const auto* st = std::get_if<StarShape>(&shape);
    if (st && st->data.branches.size() == 3) {
        if (!certified_star_case(v.classification))
            return inconclusive(v, "classification " + to_string(v.classification.kind) +
                                       " is outside the certified star cases");
        return star_certificate(std::move(v), g, p, opt);
    }
    if (recognize_dtilde(g)) {
        const auto md = multiplicity_data(g, p, opt.z_tilde);
        v.obstruction = dtilde_obstruction(g, p, md);
        if (v.obstruction && v.obstruction->holds) {
            v.kind = VerdictKind::NotTautEvidence;
            v.method = VerdictMethod::DTildeObstruction;
            v.reason = "a functional on the overlaps kills every coboundary but not x d/dx on the last curve";
            return v;
        }
        return inconclusive(v, v.obstruction ? "obstruction audit failed" : "D10 is a unit mod p; no obstruction");
    }
    return inconclusive(v, "graph shape is outside the certified cases");
}

}  // namespace singtaut
