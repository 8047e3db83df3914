#pragma once

#include <cstdint>
#include <vector>

#include "neoramsey/graph.hpp"

namespace neoramsey {

inline constexpr int kMaxExhaustiveVertices = 7;
inline constexpr int kMaxCounterexampleSamples = 64;

struct ArrowReport {
    int k = 0;
    int l = 0;
    int n = 0;
    std::uint64_t graph_count = 0;           // 2^(n(n-1)/2) labeled graphs
    bool arrow_holds = false;                // every graph has a K_k or an I_l
    std::uint64_t counterexample_count = 0;  // graphs with neither
    std::vector<SimpleGraph> sample_counterexamples;  // first few, capped
};

// Enumerates ALL labeled graphs on n vertices and checks each one for a K_k
// or an I_l by testing every vertex subset directly. No isomorphism
// reduction; n is capped at kMaxExhaustiveVertices to keep the enumeration
// honest. Requires k, l >= 1.
ArrowReport exhaustive_ramsey_check(int k, int l, int n);

}  // namespace neoramsey
