#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neoramsey/distance_set.hpp"

namespace neoramsey {

// Undirected simple graph on vertices labeled 1..p, adjacency stored as one
// bitset row per vertex.
class SimpleGraph {
public:
    explicit SimpleGraph(int vertex_count);

    int vertex_count() const { return p_; }
    int edge_count() const { return edges_; }

    bool adjacent(int i, int j) const;
    void add_edge(int i, int j);  // throws on self-loops or labels outside 1..p

    // Raw adjacency row of vertex i; bit v-1 set iff i ~ v. words_per_row()
    // words per vertex.
    const std::uint64_t* row(int i) const;
    int words_per_row() const { return words_; }

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_vertex(int i) const;

    int p_ = 0;
    int words_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Graph on p vertices with i ~ j iff |i - j| is in `a`. Distances are linear
// label differences, no wraparound. Throws if some element of `a` exceeds
// p - 1 (unrealizable distance).
SimpleGraph build_distance_graph(int p, const DistanceSet& a);

// Same vertices, adjacency negated off the diagonal.
SimpleGraph complement(const SimpleGraph& g);

// Exact search for t pairwise adjacent vertices. Returns one such set in
// ascending label order, or nullopt. Exhaustive branch and bound; vertices
// are tried in natural order so the witness is deterministic.
std::optional<std::vector<int>> find_clique(const SimpleGraph& g, int t);

bool contains_clique(const SimpleGraph& g, int t);

// Per-distance adjacency classification. A graph arises from a total distance
// partition exactly when `mixed` is empty.
struct DistanceClassification {
    DistanceSet all_adjacent;     // every pair at this distance is adjacent
    DistanceSet all_nonadjacent;  // no pair at this distance is adjacent
    DistanceSet mixed;            // some pairs adjacent, some not
};

// Requires p >= 2 (there are no distances to classify otherwise).
DistanceClassification classify_distances(const SimpleGraph& g);

// Brute-force isomorphism test: degree-sequence filter, then all vertex
// permutations. Only for tiny graphs; requires p <= 8 on both sides.
bool isomorphic_brute(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace neoramsey
