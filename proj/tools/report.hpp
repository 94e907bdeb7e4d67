#pragma once

// JSON forms of the core result types and the envelope printed by the CLI.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singtaut/singtaut.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN
template <typename T>
struct adl_serializer<std::optional<T>> {
    static void to_json(json& j, const std::optional<T>& v) {
        if (v)
            j = *v;
        else
            j = nullptr;
    }
    static void from_json(const json& j, std::optional<T>& v) {
        if (j.is_null())
            v.reset();
        else
            v = j.get<T>();
    }
};
NLOHMANN_JSON_NAMESPACE_END

namespace singtaut {

using json = nlohmann::json;

void to_json(json& j, const FClassification& c);
void from_json(const json& j, FClassification& c);
void to_json(json& j, const CoboundaryTypeRow& r);
void from_json(const json& j, CoboundaryTypeRow& r);
void to_json(json& j, const SweepStep& s);
void from_json(const json& j, SweepStep& s);
void to_json(json& j, const SweepResult& s);
void from_json(const json& j, SweepResult& s);
void to_json(json& j, const CertificateRow& r);
void from_json(const json& j, CertificateRow& r);
void to_json(json& j, const FamilyAudit& a);
void from_json(const json& j, FamilyAudit& a);
void to_json(json& j, const DTildeObstruction& o);
void from_json(const json& j, DTildeObstruction& o);
void to_json(json& j, const ModuliOrbit& o);
void from_json(const json& j, ModuliOrbit& o);
void to_json(json& j, const TautnessVerdict& v);
void from_json(const json& j, TautnessVerdict& v);
void to_json(json& j, const CechResult& r);
void from_json(const json& j, CechResult& r);
void to_json(json& j, const MultiplicityData& m);
void from_json(const json& j, MultiplicityData& m);
void to_json(json& j, const UniquenessRow& r);
void from_json(const json& j, UniquenessRow& r);
void to_json(json& j, const UniquenessReport& r);
void from_json(const json& j, UniquenessReport& r);

struct InputDigest {
    std::string path;
    /// FNV-1a 64-bit hash of the file contents, hex.
    std::string digest;

    bool operator==(const InputDigest&) const = default;
};

/// Everything one CLI invocation reports.
struct RunReport {
    std::string command;
    std::vector<std::string> arguments;
    std::vector<InputDigest> inputs;
    json result;
    /// The rule behind each verdict line, in words.
    std::vector<std::string> clauses;
    int exit_status = 0;

    bool operator==(const RunReport&) const = default;
};

void to_json(json& j, const InputDigest& d);
void from_json(const json& j, InputDigest& d);
void to_json(json& j, const RunReport& r);
void from_json(const json& j, RunReport& r);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace singtaut
