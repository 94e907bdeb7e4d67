#include "report.hpp"

#include <cstdint>
#include <cstdio>

namespace singtaut {

NLOHMANN_JSON_SERIALIZE_ENUM(FKind, {{FKind::FRegular, "FRegular"},
                                     {FKind::FPureNonRDP, "FPureNonRDP"},
                                     {FKind::RDPEquationDependent, "RDPEquationDependent"},
                                     {FKind::NotFPure, "NotFPure"},
                                     {FKind::NotApplicable, "NotApplicable"}})

NLOHMANN_JSON_SERIALIZE_ENUM(PureCase, {{PureCase::None, "None"},
                                        {PureCase::Type333, "Type333"},
                                        {PureCase::Type236, "Type236"},
                                        {PureCase::Type244, "Type244"},
                                        {PureCase::Type2222, "Type2222"},
                                        {PureCase::DTilde, "DTilde"}})

NLOHMANN_JSON_SERIALIZE_ENUM(CoboundaryType, {{CoboundaryType::A, "A"},
                                              {CoboundaryType::B, "B"},
                                              {CoboundaryType::C, "C"},
                                              {CoboundaryType::D, "D"},
                                              {CoboundaryType::FAIL, "FAIL"}})

NLOHMANN_JSON_SERIALIZE_ENUM(VerdictKind, {{VerdictKind::Taut, "Taut"},
                                           {VerdictKind::NotTautEvidence, "NotTautEvidence"},
                                           {VerdictKind::ModuliFamily, "ModuliFamily"},
                                           {VerdictKind::Inconclusive, "Inconclusive"}})

NLOHMANN_JSON_SERIALIZE_ENUM(VerdictMethod, {{VerdictMethod::None, "None"},
                                             {VerdictMethod::ChainRule, "ChainRule"},
                                             {VerdictMethod::H1Vanishes, "H1Vanishes"},
                                             {VerdictMethod::DTildeObstruction, "DTildeObstruction"},
                                             {VerdictMethod::CrossRatioModuli, "CrossRatioModuli"}})

NLOHMANN_JSON_SERIALIZE_ENUM(CechModel, {{CechModel::Star, "star"},
                                         {CechModel::Chain, "chain"},
                                         {CechModel::DTilde, "dtilde"}})

void to_json(json& j, const FClassification& c) {
    j = json{{"kind", c.kind},         {"pure_case", c.pure_case}, {"lambda", c.lambda},
             {"family", c.family},     {"allowed_p", c.allowed_p}, {"clause", c.clause}};
}

void from_json(const json& j, FClassification& c) {
    j.at("kind").get_to(c.kind);
    j.at("pure_case").get_to(c.pure_case);
    j.at("lambda").get_to(c.lambda);
    j.at("family").get_to(c.family);
    j.at("allowed_p").get_to(c.allowed_p);
    j.at("clause").get_to(c.clause);
}

void to_json(json& j, const CoboundaryTypeRow& r) {
    j = json{{"t", r.t},       {"s_min", r.s_min}, {"r", r.r},
             {"s_minus_r", r.s_minus_r}, {"type", r.type}, {"note", r.note}};
}

void from_json(const json& j, CoboundaryTypeRow& r) {
    j.at("t").get_to(r.t);
    j.at("s_min").get_to(r.s_min);
    j.at("r").get_to(r.r);
    j.at("s_minus_r").get_to(r.s_minus_r);
    j.at("type").get_to(r.type);
    j.at("note").get_to(r.note);
}

void to_json(json& j, const SweepStep& s) { j = json{{"s", s.s}, {"type", s.type}, {"r", s.r}}; }

void from_json(const json& j, SweepStep& s) {
    j.at("s").get_to(s.s);
    j.at("type").get_to(s.type);
    j.at("r").get_to(s.r);
}

void to_json(json& j, const SweepResult& s) {
    j = json{{"ok", s.ok}, {"t", s.t}, {"s_start", s.s_start}, {"steps", s.steps}, {"reason", s.reason}};
}

void from_json(const json& j, SweepResult& s) {
    j.at("ok").get_to(s.ok);
    j.at("t").get_to(s.t);
    j.at("s_start").get_to(s.s_start);
    j.at("steps").get_to(s.steps);
    j.at("reason").get_to(s.reason);
}

void to_json(json& j, const CertificateRow& r) {
    j = json{{"t", r.t}, {"y_ok", r.y_ok}, {"x_row", r.x_row}, {"sweep", r.sweep}};
}

void from_json(const json& j, CertificateRow& r) {
    j.at("t").get_to(r.t);
    j.at("y_ok").get_to(r.y_ok);
    j.at("x_row").get_to(r.x_row);
    j.at("sweep").get_to(r.sweep);
}

void to_json(json& j, const FamilyAudit& a) {
    j = json{{"family", a.family}, {"generators", a.generators}, {"nonzero", a.nonzero}, {"argument", a.argument}};
}

void from_json(const json& j, FamilyAudit& a) {
    j.at("family").get_to(a.family);
    j.at("generators").get_to(a.generators);
    j.at("nonzero").get_to(a.nonzero);
    j.at("argument").get_to(a.argument);
}

void to_json(json& j, const DTildeObstruction& o) {
    j = json{{"p", o.p},
             {"exponent_matrix", o.exponent_matrix},
             {"direction_matrix", o.direction_matrix},
             {"audits", o.audits},
             {"target_value", o.target_value},
             {"holds", o.holds}};
}

void from_json(const json& j, DTildeObstruction& o) {
    j.at("p").get_to(o.p);
    j.at("exponent_matrix").get_to(o.exponent_matrix);
    j.at("direction_matrix").get_to(o.direction_matrix);
    j.at("audits").get_to(o.audits);
    j.at("target_value").get_to(o.target_value);
    j.at("holds").get_to(o.holds);
}

void to_json(json& j, const ModuliOrbit& o) {
    j = json{{"representative", o.representative}, {"members", o.members}};
}

void from_json(const json& j, ModuliOrbit& o) {
    j.at("representative").get_to(o.representative);
    j.at("members").get_to(o.members);
}

void to_json(json& j, const TautnessVerdict& v) {
    j = json{{"kind", v.kind},
             {"method", v.method},
             {"classification", v.classification},
             {"rows", v.rows},
             {"t_checked", v.t_checked},
             {"slices", v.slices},
             {"threshold", v.threshold},
             {"tail_used", v.tail_used},
             {"type_tuple", v.type_tuple},
             {"obstruction", v.obstruction},
             {"orbits", v.orbits},
             {"reason", v.reason}};
}

void from_json(const json& j, TautnessVerdict& v) {
    j.at("kind").get_to(v.kind);
    j.at("method").get_to(v.method);
    j.at("classification").get_to(v.classification);
    j.at("rows").get_to(v.rows);
    j.at("t_checked").get_to(v.t_checked);
    j.at("slices").get_to(v.slices);
    j.at("threshold").get_to(v.threshold);
    j.at("tail_used").get_to(v.tail_used);
    j.at("type_tuple").get_to(v.type_tuple);
    j.at("obstruction").get_to(v.obstruction);
    j.at("orbits").get_to(v.orbits);
    j.at("reason").get_to(v.reason);
}

void to_json(json& j, const CechResult& r) {
    j = json{{"rank", r.rank},   {"rank_doubled", r.rank_doubled}, {"stable", r.stable},
             {"model", r.model}, {"slices", r.slices},             {"window_s", r.window_s},
             {"window_r", r.window_r}};
}

void from_json(const json& j, CechResult& r) {
    j.at("rank").get_to(r.rank);
    j.at("rank_doubled").get_to(r.rank_doubled);
    j.at("stable").get_to(r.stable);
    j.at("model").get_to(r.model);
    j.at("slices").get_to(r.slices);
    j.at("window_s").get_to(r.window_s);
    j.at("window_r").get_to(r.window_r);
}

void to_json(json& j, const MultiplicityData& m) {
    j = json{{"z_tilde", m.z_tilde}, {"sequence", m.sequence}, {"tau", m.tau},
             {"lambda_weight", m.lambda_weight}, {"nu", m.nu}, {"z", m.z}};
}

void from_json(const json& j, MultiplicityData& m) {
    j.at("z_tilde").get_to(m.z_tilde);
    j.at("sequence").get_to(m.sequence);
    j.at("tau").get_to(m.tau);
    j.at("lambda_weight").get_to(m.lambda_weight);
    j.at("nu").get_to(m.nu);
    j.at("z").get_to(m.z);
}

void to_json(json& j, const UniquenessRow& r) {
    j = json{{"graph_label", r.graph_label}, {"f_pure_types", r.f_pure_types}, {"mismatches", r.mismatches}};
}

void from_json(const json& j, UniquenessRow& r) {
    j.at("graph_label").get_to(r.graph_label);
    j.at("f_pure_types").get_to(r.f_pure_types);
    j.at("mismatches").get_to(r.mismatches);
}

void to_json(json& j, const UniquenessReport& r) {
    j = json{{"p", r.p}, {"n_max", r.n_max}, {"rows", r.rows}, {"pass", r.pass}};
}

void from_json(const json& j, UniquenessReport& r) {
    j.at("p").get_to(r.p);
    j.at("n_max").get_to(r.n_max);
    j.at("rows").get_to(r.rows);
    j.at("pass").get_to(r.pass);
}

void to_json(json& j, const InputDigest& d) { j = json{{"path", d.path}, {"digest", d.digest}}; }

void from_json(const json& j, InputDigest& d) {
    j.at("path").get_to(d.path);
    j.at("digest").get_to(d.digest);
}

void to_json(json& j, const RunReport& r) {
    j = json{{"command", r.command}, {"arguments", r.arguments}, {"inputs", r.inputs},
             {"result", r.result},   {"clauses", r.clauses},     {"exit_status", r.exit_status}};
}

void from_json(const json& j, RunReport& r) {
    j.at("command").get_to(r.command);
    j.at("arguments").get_to(r.arguments);
    j.at("inputs").get_to(r.inputs);
    r.result = j.at("result");
    j.at("clauses").get_to(r.clauses);
    j.at("exit_status").get_to(r.exit_status);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace singtaut
