#include "neoramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace neoramsey {

SimpleGraph::SimpleGraph(int vertex_count) : p_(vertex_count) {
    if (p_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    words_ = (p_ + 63) / 64;
    bits_.assign(static_cast<size_t>(p_) * static_cast<size_t>(words_), 0);
}

void SimpleGraph::check_vertex(int i) const {
    if (i < 1 || i > p_) {
        throw std::invalid_argument("vertex " + std::to_string(i) + " outside 1.." +
                                    std::to_string(p_));
    }
}

bool SimpleGraph::adjacent(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return false;
    int b = j - 1;
    return (row(i)[b / 64] >> (b % 64)) & 1u;
}

void SimpleGraph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (adjacent(i, j)) return;
    auto set_bit = [&](int from, int to) {
        int b = to - 1;
        bits_[static_cast<size_t>(from - 1) * static_cast<size_t>(words_) +
              static_cast<size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
    };
    set_bit(i, j);
    set_bit(j, i);
    ++edges_;
}

const std::uint64_t* SimpleGraph::row(int i) const {
    return bits_.data() + static_cast<size_t>(i - 1) * static_cast<size_t>(words_);
}

SimpleGraph build_distance_graph(int p, const DistanceSet& a) {
    if (!a.empty() && a.max_element() > p - 1) {
        throw std::invalid_argument("distance " + std::to_string(a.max_element()) +
                                    " is unrealizable on " + std::to_string(p) +
                                    " vertices");
    }
    SimpleGraph g(p);
    for (int d : a) {
        for (int i = 1; i + d <= p; ++i) g.add_edge(i, i + d);
    }
    return g;
}

SimpleGraph complement(const SimpleGraph& g) {
    int p = g.vertex_count();
    SimpleGraph h(p);
    for (int i = 1; i <= p; ++i) {
        for (int j = i + 1; j <= p; ++j) {
            if (!g.adjacent(i, j)) h.add_edge(i, j);
        }
    }
    return h;
}

namespace {

struct CliqueSearch {
    const SimpleGraph& g;
    int target;
    int words;
    std::vector<int> chosen;
    std::vector<std::uint64_t> frames;  // candidate bitsets, one frame per level

    explicit CliqueSearch(const SimpleGraph& graph, int t)
        : g(graph), target(t), words(graph.words_per_row()) {
        frames.assign(static_cast<size_t>(t + 1) * static_cast<size_t>(words), 0);
    }

    std::uint64_t* frame(int depth) { return frames.data() + static_cast<size_t>(depth) * words; }

    static int popcount(const std::uint64_t* w, int words) {
        int c = 0;
        for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
        return c;
    }

    bool expand(int depth) {
        if (depth == target) return true;
        std::uint64_t* cand = frame(depth);
        if (static_cast<int>(chosen.size()) + popcount(cand, words) < target) return false;
        for (int w = 0; w < words; ++w) {
            while (cand[w]) {
                int bit = std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                int v = w * 64 + bit + 1;
                // cand now holds exactly the candidates above v, so the next
                // level is cand intersected with v's neighborhood
                std::uint64_t* next = frame(depth + 1);
                const std::uint64_t* nv = g.row(v);
                for (int x = 0; x < words; ++x) next[x] = cand[x] & nv[x];
                chosen.push_back(v);
                if (expand(depth + 1)) return true;
                chosen.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_clique(const SimpleGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("clique size must be >= 1");
    if (t > g.vertex_count()) return std::nullopt;
    CliqueSearch search(g, t);
    std::uint64_t* root = search.frame(0);
    int p = g.vertex_count();
    for (int v = 0; v < p; ++v) root[v / 64] |= std::uint64_t{1} << (v % 64);
    if (search.expand(0)) return search.chosen;
    return std::nullopt;
}

bool contains_clique(const SimpleGraph& g, int t) { return find_clique(g, t).has_value(); }

DistanceClassification classify_distances(const SimpleGraph& g) {
    int p = g.vertex_count();
    if (p < 2) throw std::invalid_argument("classification needs at least two vertices");
    DistanceClassification out;
    for (int d = 1; d <= p - 1; ++d) {
        int adjacent_pairs = 0;
        int pairs = p - d;
        for (int i = 1; i + d <= p; ++i) {
            if (g.adjacent(i, i + d)) ++adjacent_pairs;
        }
        if (adjacent_pairs == pairs) {
            out.all_adjacent.insert(d);
        } else if (adjacent_pairs == 0) {
            out.all_nonadjacent.insert(d);
        } else {
            out.mixed.insert(d);
        }
    }
    return out;
}

bool isomorphic_brute(const SimpleGraph& a, const SimpleGraph& b) {
    int p = a.vertex_count();
    if (p > 8 || b.vertex_count() > 8) {
        throw std::invalid_argument("brute-force isomorphism is limited to 8 vertices");
    }
    if (b.vertex_count() != p || b.edge_count() != a.edge_count()) return false;

    auto degree_sequence = [](const SimpleGraph& g) {
        std::vector<int> d(static_cast<size_t>(g.vertex_count()), 0);
        for (int i = 1; i <= g.vertex_count(); ++i) {
            for (int j = 1; j <= g.vertex_count(); ++j) {
                if (i != j && g.adjacent(i, j)) ++d[static_cast<size_t>(i - 1)];
            }
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_sequence(a) != degree_sequence(b)) return false;

    std::vector<int> perm(static_cast<size_t>(p));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool match = true;
        for (int i = 1; match && i <= p; ++i) {
            for (int j = i + 1; j <= p; ++j) {
                if (a.adjacent(i, j) !=
                    b.adjacent(perm[static_cast<size_t>(i - 1)], perm[static_cast<size_t>(j - 1)])) {
                    match = false;
                    break;
                }
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace neoramsey
