#pragma once

// Test-only brute-force oracles. Everything here is written from the bare
// definitions with no pruning, independent of the library's implementation
// paths, so it can serve as the expected side of the checks.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "neoramsey/distance_set.hpp"
#include "neoramsey/graph.hpp"

namespace oracle {

inline std::set<int> brute_closure(const std::set<int>& u) {
    std::set<int> out = u;
    for (int x : u) {
        for (int y : u) {
            if (x != y) out.insert(x > y ? x - y : y - x);
        }
    }
    return out;
}

// Calls fn on every size-`want` subset of elems (as a vector of values).
template <typename Fn>
void for_each_subset(const std::vector<int>& elems, int want, Fn&& fn) {
    int n = static_cast<int>(elems.size());
    if (want > n) return;
    std::vector<int> idx(static_cast<size_t>(want));
    for (int i = 0; i < want; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<int> sub;
        sub.reserve(static_cast<size_t>(want));
        for (int i : idx) sub.push_back(elems[static_cast<size_t>(i)]);
        fn(sub);
        int i = want - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - want + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < want; ++j) {
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
}

// The partition property straight from its definition: no (t-1)-subset of
// the side may have its closure contained in the side.
inline bool brute_side_ok(const std::vector<int>& side, int t) {
    std::set<int> side_set(side.begin(), side.end());
    bool ok = true;
    for_each_subset(side, t - 1, [&](const std::vector<int>& sub) {
        std::set<int> cl = brute_closure(std::set<int>(sub.begin(), sub.end()));
        if (std::includes(side_set.begin(), side_set.end(), cl.begin(), cl.end())) ok = false;
    });
    return ok;
}

inline bool brute_property(const std::vector<std::vector<int>>& parts,
                           const std::vector<int>& thresholds) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!brute_side_ok(parts[i], thresholds[i])) return false;
    }
    return true;
}

// Every partition of {1..limit} into `colors` parts satisfying the property.
inline std::vector<std::vector<std::vector<int>>> brute_legal_partitions(
    const std::vector<int>& thresholds, int limit) {
    int colors = static_cast<int>(thresholds.size());
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> assign(static_cast<size_t>(limit), 0);
    while (true) {
        std::vector<std::vector<int>> parts(static_cast<size_t>(colors));
        for (int d = 1; d <= limit; ++d) {
            parts[static_cast<size_t>(assign[static_cast<size_t>(d - 1)])].push_back(d);
        }
        if (brute_property(parts, thresholds)) out.push_back(parts);
        int i = limit - 1;
        while (i >= 0 && assign[static_cast<size_t>(i)] == colors - 1) {
            assign[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++assign[static_cast<size_t>(i)];
    }
    return out;
}

// Clique detection by checking every t-subset of vertices directly.
inline bool brute_has_clique(const neoramsey::SimpleGraph& g, int t) {
    std::vector<int> vertices;
    for (int v = 1; v <= g.vertex_count(); ++v) vertices.push_back(v);
    bool found = false;
    for_each_subset(vertices, t, [&](const std::vector<int>& sub) {
        if (found) return;
        for (size_t i = 0; i < sub.size(); ++i) {
            for (size_t j = i + 1; j < sub.size(); ++j) {
                if (!g.adjacent(sub[i], sub[j])) return;
            }
        }
        found = true;
    });
    return found;
}

}  // namespace oracle
