#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sepath/construct.hpp"
#include "sepath/core.hpp"
#include "sepath/verify.hpp"

// Stable on-disk formats: the FamilyFile JSON schema (1-based standard
// labels only, canonical key order, no floating point — load/save round-trips
// byte-identically), JSON separation reports, and static DOT/SVG figures.

namespace sepath {

struct FamilyFile {
    int format_version = 1;
    PathFamily family;
    std::string method = "unknown";
    std::optional<long long> bound_claimed;
    std::optional<nlohmann::json> trace;
};

nlohmann::json family_to_json(const FamilyFile& f);

// Throws std::invalid_argument naming the offending path index on bad input.
FamilyFile family_from_json(const nlohmann::json& j);

void save_family(const FamilyFile& f, const std::string& path);
FamilyFile load_family(const std::string& path);

nlohmann::json report_to_json(const SeparationReport& rep);

// Construction trace serialized with standard labels only.
nlohmann::json trace_to_json(const FSeparatorResult& res);

// Static circular-layout figures, one color per path.
std::string family_to_dot(const PathFamily& family);
std::string family_to_svg(const PathFamily& family);

}  // namespace sepath
