#pragma once

#include <optional>
#include <string>
#include <vector>

#include "neoramsey/distance_set.hpp"

namespace neoramsey {

// A concrete partition claimed to witness a Ramsey-style lower bound on p
// vertices, together with the two independent verification outcomes.
struct Certificate {
    Thresholds thresholds;
    int p = 0;
    MultiPartition partition;  // limit == p - 1

    std::optional<bool> property_valid;  // closure-based partition property
    std::optional<bool> oracle_valid;    // no color-i clique of size t_i in the distance graph
    // Monochromatic clique (vertex labels) demonstrating invalidity; present
    // exactly when one of the checks failed.
    std::optional<std::vector<int>> witness;
    std::string provenance = "user-supplied";

    // Throws std::invalid_argument on limit/p mismatch or a color-count
    // mismatch between thresholds and partition parts.
    Certificate(Thresholds thresholds, int p, MultiPartition partition,
                std::string provenance = "user-supplied");

    static Certificate bicolor(int k, int l, int p, DistanceSet a, DistanceSet b);

    bool both_valid() const {
        return property_valid.value_or(false) && oracle_valid.value_or(false);
    }
};

// Runs both checks and fills property_valid, oracle_valid, and witness.
// The property check enumerates closed subsets; the oracle builds the
// per-color distance graphs and runs the exact clique search. The two routes
// are independent and must agree.
Certificate verify_certificate(Certificate c);

}  // namespace neoramsey
