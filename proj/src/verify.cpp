#include "neoramsey/verify.hpp"

#include <stdexcept>

#include "neoramsey/closure.hpp"
#include "neoramsey/graph.hpp"

namespace neoramsey {

Certificate::Certificate(Thresholds thresholds_in, int p_in, MultiPartition partition_in,
                         std::string provenance_in)
    : thresholds(std::move(thresholds_in)),
      p(p_in),
      partition(std::move(partition_in)),
      provenance(std::move(provenance_in)) {
    if (p < 1) throw std::invalid_argument("certificate needs p >= 1");
    if (partition.limit != p - 1) {
        throw std::invalid_argument("partition limit " + std::to_string(partition.limit) +
                                    " does not match p - 1 = " + std::to_string(p - 1));
    }
    if (thresholds.color_count() != static_cast<int>(partition.parts.size())) {
        throw std::invalid_argument("certificate has " +
                                    std::to_string(partition.parts.size()) + " parts but " +
                                    std::to_string(thresholds.color_count()) + " thresholds");
    }
}

Certificate Certificate::bicolor(int k, int l, int p, DistanceSet a, DistanceSet b) {
    return Certificate(Thresholds::pair(k, l), p,
                       MultiPartition(p - 1, {std::move(a), std::move(b)}));
}

Certificate verify_certificate(Certificate c) {
    c.property_valid.reset();
    c.oracle_valid.reset();
    c.witness.reset();

    // Closure route: a violating subset maps straight to a clique rooted at
    // vertex 1, which makes a usable witness even without the oracle.
    std::optional<std::vector<int>> property_witness;
    bool property_ok = true;
    for (int color = 0; color < c.thresholds.color_count(); ++color) {
        auto violation =
            find_closure_violation(c.partition.parts[static_cast<size_t>(color)], c.thresholds[color]);
        if (violation) {
            property_ok = false;
            if (!property_witness) {
                std::vector<int> vertices{1};
                for (int d : *violation) vertices.push_back(1 + d);
                property_witness = std::move(vertices);
            }
        }
    }
    c.property_valid = property_ok;

    // Oracle route: exact clique search on each color's distance graph.
    std::optional<std::vector<int>> oracle_witness;
    bool oracle_ok = true;
    for (int color = 0; color < c.thresholds.color_count(); ++color) {
        SimpleGraph g = build_distance_graph(c.p, c.partition.parts[static_cast<size_t>(color)]);
        if (auto clique = find_clique(g, c.thresholds[color])) {
            oracle_ok = false;
            if (!oracle_witness) oracle_witness = std::move(*clique);
        }
    }
    c.oracle_valid = oracle_ok;

    if (!oracle_ok) {
        c.witness = std::move(oracle_witness);
    } else if (!property_ok) {
        c.witness = std::move(property_witness);
    }
    return c;
}

}  // namespace neoramsey
