#pragma once

#include <json.hpp>

#include "neoramsey/search.hpp"
#include "neoramsey/verify.hpp"

namespace neoramsey {

inline constexpr const char* kCertificateSchemaVersion = "1";

// Certificate document: {schema_version, kind, thresholds, p, parts,
// property_valid?, oracle_valid?, witness?, provenance}. Two colors use part
// names A and B; any other count uses A1..An. Validity booleans and the
// witness appear only on verified certificates.
nlohmann::json certificate_to_json(const Certificate& c);

// Throws std::invalid_argument on a malformed document (wrong schema
// version, unknown part names, overlapping or non-covering parts, ...).
// Verification state in the document is not trusted; callers re-verify.
Certificate certificate_from_json(const nlohmann::json& j);

// Search reports with each certificate embedded as a verified certificate
// document, so any element of "certificates" can be fed back to the verifier.
nlohmann::json report_to_json(const SearchReport& report, const Thresholds& t);
nlohmann::json report_to_json(const MultiSearchReport& report, const Thresholds& t);

}  // namespace neoramsey
