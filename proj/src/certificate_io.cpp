#include "neoramsey/certificate_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace neoramsey {

namespace {

std::vector<std::string> part_names(int colors) {
    if (colors == 2) return {"A", "B"};
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(colors));
    for (int i = 1; i <= colors; ++i) names.push_back("A" + std::to_string(i));
    return names;
}

nlohmann::json verified_certificate_json(const MultiPartition& partition, const Thresholds& t) {
    Certificate cert = verify_certificate(
        Certificate(t, partition.limit + 1, partition, "search"));
    return certificate_to_json(cert);
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["schema_version"] = kCertificateSchemaVersion;
    j["kind"] = c.thresholds.color_count() == 2 ? "bicolor" : "multicolor";
    j["thresholds"] = c.thresholds.values();
    j["p"] = c.p;
    nlohmann::json parts = nlohmann::json::object();
    auto names = part_names(c.thresholds.color_count());
    for (size_t i = 0; i < c.partition.parts.size(); ++i) {
        parts[names[i]] = c.partition.parts[i].elements();
    }
    j["parts"] = std::move(parts);
    if (c.property_valid) j["property_valid"] = *c.property_valid;
    if (c.oracle_valid) j["oracle_valid"] = *c.oracle_valid;
    if (c.witness) j["witness"] = *c.witness;
    j["provenance"] = c.provenance;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema_version").get<std::string>() != kCertificateSchemaVersion) {
            throw std::invalid_argument("unsupported certificate schema version");
        }
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "bicolor" && kind != "multicolor") {
            throw std::invalid_argument("unknown certificate kind '" + kind + "'");
        }
        Thresholds t(j.at("thresholds").get<std::vector<int>>());
        if (kind == "bicolor" && t.color_count() != 2) {
            throw std::invalid_argument("bicolor certificates need exactly two thresholds");
        }
        int p = j.at("p").get<int>();

        const auto& parts_json = j.at("parts");
        auto names = part_names(t.color_count());
        std::vector<DistanceSet> parts;
        parts.reserve(names.size());
        for (const auto& name : names) {
            parts.emplace_back(parts_json.at(name).get<std::vector<int>>());
        }
        if (parts_json.size() != names.size()) {
            throw std::invalid_argument("unexpected part names in certificate");
        }

        std::string provenance = j.value("provenance", "user-supplied");
        return Certificate(std::move(t), p, MultiPartition(p - 1, std::move(parts)),
                           std::move(provenance));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate document: ") + e.what());
    }
}

namespace {

template <typename Report, typename ToMulti>
nlohmann::json report_json_impl(const Report& report, const Thresholds& t, ToMulti&& to_multi) {
    nlohmann::json j;
    j["thresholds"] = t.values();
    j["status"] = report.status == SearchStatus::complete ? "complete" : "cap_exceeded";
    j["last_legal_limit"] = report.last_legal_limit;
    if (report.status == SearchStatus::complete) {
        j["neo_ramsey"] = report.neo_ramsey;
        j["first_failing_limit"] = report.first_failing_limit;
    } else {
        j["cap"] = report.last_legal_limit;
    }
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : report.certificates) {
        certs.push_back(verified_certificate_json(to_multi(c), t));
    }
    j["certificates"] = std::move(certs);
    j["nodes_expanded"] = report.nodes_expanded;
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

}  // namespace

nlohmann::json report_to_json(const SearchReport& report, const Thresholds& t) {
    return report_json_impl(report, t,
                            [](const BiPartition& p) { return MultiPartition::from_bipartition(p); });
}

nlohmann::json report_to_json(const MultiSearchReport& report, const Thresholds& t) {
    return report_json_impl(report, t, [](const MultiPartition& p) { return p; });
}

}  // namespace neoramsey
