#include "neoramsey/exhaustive.hpp"

#include <stdexcept>
#include <string>

namespace neoramsey {

namespace {

// Edge bitmask of the complete graph restricted to a vertex subset, under a
// fixed enumeration of the n(n-1)/2 vertex pairs.
std::vector<std::uint32_t> subset_edge_masks(int n, int size,
                                             const std::vector<std::vector<int>>& pair_index) {
    std::vector<std::uint32_t> masks;
    if (size > n) return masks;
    std::vector<int> sub(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) sub[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i = 0; i < size; ++i) {
            for (int j = i + 1; j < size; ++j) {
                m |= std::uint32_t{1}
                     << pair_index[static_cast<size_t>(sub[static_cast<size_t>(i)])]
                                  [static_cast<size_t>(sub[static_cast<size_t>(j)])];
            }
        }
        masks.push_back(m);
        // next size-combination of {0..n-1}
        int i = size - 1;
        while (i >= 0 && sub[static_cast<size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++sub[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j) {
            sub[static_cast<size_t>(j)] = sub[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return masks;
}

SimpleGraph graph_from_edge_mask(int n, std::uint32_t g,
                                 const std::vector<std::pair<int, int>>& pairs) {
    SimpleGraph out(n);
    for (size_t e = 0; e < pairs.size(); ++e) {
        if (g & (std::uint32_t{1} << e)) out.add_edge(pairs[e].first + 1, pairs[e].second + 1);
    }
    return out;
}

}  // namespace

ArrowReport exhaustive_ramsey_check(int k, int l, int n) {
    if (n < 1 || n > kMaxExhaustiveVertices) {
        throw std::invalid_argument("exhaustive enumeration supports 1.." +
                                    std::to_string(kMaxExhaustiveVertices) +
                                    " vertices, got " + std::to_string(n));
    }
    if (k < 1 || l < 1) throw std::invalid_argument("clique sizes must be >= 1");

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> pair_index(static_cast<size_t>(n),
                                             std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pair_index[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }
    }

    auto kmasks = subset_edge_masks(n, k, pair_index);
    auto lmasks = subset_edge_masks(n, l, pair_index);

    ArrowReport report;
    report.k = k;
    report.l = l;
    report.n = n;
    report.graph_count = std::uint64_t{1} << pairs.size();

    for (std::uint64_t g = 0; g < report.graph_count; ++g) {
        auto mask = static_cast<std::uint32_t>(g);
        bool has_kk = false;
        for (std::uint32_t m : kmasks) {
            if ((mask & m) == m) {
                has_kk = true;
                break;
            }
        }
        if (has_kk) continue;
        bool has_il = false;
        for (std::uint32_t m : lmasks) {
            if ((mask & m) == 0) {
                has_il = true;
                break;
            }
        }
        if (has_il) continue;
        ++report.counterexample_count;
        if (report.sample_counterexamples.size() <
            static_cast<size_t>(kMaxCounterexampleSamples)) {
            report.sample_counterexamples.push_back(graph_from_edge_mask(n, mask, pairs));
        }
    }
    report.arrow_holds = report.counterexample_count == 0;
    return report;
}

}  // namespace neoramsey
