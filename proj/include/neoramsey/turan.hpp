#pragma once

#include "neoramsey/graph.hpp"

namespace neoramsey {

struct TuranEdgeCount {
    long long edges = 0;    // p(p-1)/2 - removed
    long long removed = 0;  // r*p - (n-1)*r*(r+1)/2
    int r = 0;              // floor((p-1)/(n-1))
};

// Closed-form maximum edge count of a K_n-free graph on p vertices.
// Requires p >= 1 and n >= 2.
TuranEdgeCount turan_edge_count(int p, int n);

struct TuranResult {
    int p = 0;
    int n = 0;
    int r = 0;
    long long formula_edges = 0;
    long long removed_edges = 0;
    SimpleGraph graph;
};

// Extremal construction: the distance graph on p vertices whose nonadjacent
// distances are exactly the multiples of n-1. Edge count always matches
// turan_edge_count and the graph is K_n-free.
TuranResult turan_construct(int p, int n);

}  // namespace neoramsey
