#include "neoramsey/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

#include "neoramsey/closure.hpp"

namespace neoramsey {

namespace {

constexpr int kMaxColors = 8;

// One search node: the current partition as a bitmask per color (bit d set
// iff distance d is in that part). The depth, i.e. the limiting number, is
// tracked alongside.
struct Node {
    std::array<std::uint64_t, kMaxColors> parts{};
};

// Is there a (need)-subset of `cands` whose pairwise differences all lie in
// `side`? Candidates are consumed in ascending order; after popping u, the
// survivors are exactly the bits above u, so intersecting with side << u
// keeps precisely the v with v - u in side.
bool has_diff_clique(std::uint64_t cands, int need, std::uint64_t side) {
    if (need == 0) return true;
    while (cands != 0) {
        if (std::popcount(cands) < need) return false;
        int u = std::countr_zero(cands);
        cands &= cands - 1;
        if (has_diff_clique(cands & (side << u), need - 1, side)) return true;
    }
    return false;
}

// Can `side` absorb `next` (== current limit + 1) without acquiring a
// (t-1)-subset closed inside it? Follows the incremental form of the
// property check: only subsets containing `next` need examination, and those
// reduce to a (t-2)-subset of the old side whose members u all keep
// next - u inside the side, with pairwise differences inside the side too.
bool side_can_take(std::uint64_t side, int next, int t) {
    if (t == 2) return false;  // singletons are closed; the side must stay empty
    std::uint64_t cands = 0;
    std::uint64_t rest = side;
    while (rest != 0) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (side & (std::uint64_t{1} << (next - u))) cands |= std::uint64_t{1} << u;
    }
    return !has_diff_clique(cands, t - 2, side);
}

std::vector<int> mask_to_elements(std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Canonical order: compare the parts' element sequences color by color.
bool node_less(const Node& a, const Node& b, int colors) {
    for (int c = 0; c < colors; ++c) {
        if (a.parts[static_cast<size_t>(c)] == b.parts[static_cast<size_t>(c)]) continue;
        auto ea = mask_to_elements(a.parts[static_cast<size_t>(c)]);
        auto eb = mask_to_elements(b.parts[static_cast<size_t>(c)]);
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    }
    return false;
}

struct WorkerResult {
    int deepest = -1;
    bool alive_at_cap = false;
    std::vector<Node> nodes;  // all nodes at `deepest`, or just the canonical min
    std::uint64_t calls = 0;
};

struct Engine {
    std::vector<int> thresholds;
    int colors = 0;
    int cap = kMaxSearchLimit;
    bool collect_all = false;
    bool canonical_prune = false;
    int workers = 1;

    struct Outcome {
        SearchStatus status = SearchStatus::complete;
        int last_limit = 0;
        std::vector<Node> nodes;
        std::uint64_t calls = 0;
    };

    void record(WorkerResult& r, const Node& node, int depth) const {
        if (depth > r.deepest) {
            r.deepest = depth;
            r.nodes.clear();
            r.nodes.push_back(node);
        } else if (depth == r.deepest) {
            if (collect_all) {
                r.nodes.push_back(node);
            } else if (node_less(node, r.nodes.front(), colors)) {
                r.nodes.front() = node;
            }
        }
    }

    template <typename F>
    void for_each_child(const Node& node, int depth, std::uint64_t& calls, F&& emit) const {
        int next = depth + 1;
        for (int c = 0; c < colors; ++c) {
            if (canonical_prune && next == 1 && c > 0) continue;
            ++calls;
            if (side_can_take(node.parts[static_cast<size_t>(c)], next,
                              thresholds[static_cast<size_t>(c)])) {
                Node child = node;
                child.parts[static_cast<size_t>(c)] |= std::uint64_t{1} << next;
                emit(child);
            }
        }
    }

    void dfs(const Node& node, int depth, WorkerResult& r) const {
        record(r, node, depth);
        if (depth >= cap) {
            r.alive_at_cap = true;
            return;
        }
        for_each_child(node, depth, r.calls,
                       [&](const Node& child) { dfs(child, depth + 1, r); });
    }

    // In single-certificate mode only the canonically smallest node is kept.
    void reduce(std::vector<Node>& nodes) const {
        if (collect_all || nodes.size() <= 1) return;
        Node best = nodes.front();
        for (const Node& n : nodes) {
            if (node_less(n, best, colors)) best = n;
        }
        nodes.assign(1, best);
    }

    Outcome run() const {
        Outcome out;
        std::uint64_t calls = 0;

        // Breadth-first start: widen the frontier until there is enough work
        // to split, or the search resolves outright.
        std::vector<Node> frontier{Node{}};
        int depth = 0;
        const size_t split_target = static_cast<size_t>(8 * std::max(workers, 1));
        while (depth < cap && frontier.size() < split_target) {
            std::vector<Node> next_frontier;
            for (const Node& n : frontier) {
                for_each_child(n, depth, calls,
                               [&](const Node& child) { next_frontier.push_back(child); });
            }
            if (next_frontier.empty()) {
                out.status = SearchStatus::complete;
                out.last_limit = depth;
                out.nodes = std::move(frontier);
                reduce(out.nodes);
                out.calls = calls;
                return out;
            }
            frontier = std::move(next_frontier);
            ++depth;
        }
        if (depth >= cap) {
            out.status = SearchStatus::cap_exceeded;
            out.last_limit = depth;
            out.nodes = std::move(frontier);
            reduce(out.nodes);
            out.calls = calls;
            return out;
        }

        // Depth-first finish over disjoint subtrees, split by frontier index.
        int nworkers = std::max(1, std::min<int>(workers, static_cast<int>(frontier.size())));
        std::vector<WorkerResult> results(static_cast<size_t>(nworkers));
        auto work = [&](int w) {
            WorkerResult& r = results[static_cast<size_t>(w)];
            for (size_t i = static_cast<size_t>(w); i < frontier.size();
                 i += static_cast<size_t>(nworkers)) {
                dfs(frontier[i], depth, r);
            }
        };
        if (nworkers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(nworkers));
            for (int w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }

        int deepest = -1;
        bool alive = false;
        for (const auto& r : results) {
            deepest = std::max(deepest, r.deepest);
            alive = alive || r.alive_at_cap;
            calls += r.calls;
        }
        std::vector<Node> merged;
        for (const auto& r : results) {
            if (r.deepest == deepest) {
                merged.insert(merged.end(), r.nodes.begin(), r.nodes.end());
            }
        }
        reduce(merged);

        out.status = alive ? SearchStatus::cap_exceeded : SearchStatus::complete;
        out.last_limit = deepest;
        out.nodes = std::move(merged);
        out.calls = calls;
        return out;
    }
};

MultiPartition node_to_partition(const Node& node, int limit, int colors) {
    std::vector<DistanceSet> parts;
    parts.reserve(static_cast<size_t>(colors));
    for (int c = 0; c < colors; ++c) {
        parts.emplace_back(mask_to_elements(node.parts[static_cast<size_t>(c)]));
    }
    return MultiPartition(limit, std::move(parts));
}

Engine make_engine(const Thresholds& t, const SearchOptions& opts) {
    if (t.color_count() > kMaxColors) {
        throw std::invalid_argument("at most " + std::to_string(kMaxColors) +
                                    " colors are supported");
    }
    if (opts.worker_count < 1) throw std::invalid_argument("worker count must be >= 1");
    Engine e;
    e.thresholds = t.values();
    e.colors = t.color_count();
    if (opts.max_limit_cap) {
        if (*opts.max_limit_cap < 1 || *opts.max_limit_cap > kMaxSearchLimit) {
            throw std::invalid_argument("max limit cap must be in 1.." +
                                        std::to_string(kMaxSearchLimit));
        }
        e.cap = *opts.max_limit_cap;
    }
    e.collect_all = opts.enumerate_all_certificates;
    e.canonical_prune = opts.canonicalize && !opts.enumerate_all_certificates &&
                        t.color_count() == 2 && t.values()[0] == t.values()[1];
    e.workers = opts.worker_count;
    return e;
}

std::vector<MultiPartition> outcome_partitions(const Engine::Outcome& out, int colors) {
    std::vector<MultiPartition> parts;
    parts.reserve(out.nodes.size());
    for (const Node& n : out.nodes) {
        parts.push_back(node_to_partition(n, out.last_limit, colors));
    }
    std::sort(parts.begin(), parts.end(), [](const MultiPartition& a, const MultiPartition& b) {
        return a.parts < b.parts;
    });
    return parts;
}

}  // namespace

MultiSearchReport search_generalized(const Thresholds& t, const SearchOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    Engine engine = make_engine(t, opts);
    Engine::Outcome out = engine.run();

    MultiSearchReport report;
    report.status = out.status;
    report.last_legal_limit = out.last_limit;
    if (out.status == SearchStatus::complete) {
        report.first_failing_limit = out.last_limit + 1;
        report.neo_ramsey = out.last_limit + 2;
    }
    report.certificates = outcome_partitions(out, engine.colors);
    for (const MultiPartition& mp : report.certificates) {
        if (!has_generalized_property(mp, t)) {
            throw std::logic_error("search emitted a partition that fails the property recheck");
        }
    }
    report.nodes_expanded = out.calls;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchReport search_neo_ramsey(const Thresholds& t, const SearchOptions& opts) {
    if (t.color_count() != 2) {
        throw std::invalid_argument("search_neo_ramsey needs exactly two thresholds");
    }
    MultiSearchReport multi = search_generalized(t, opts);
    SearchReport report;
    report.status = multi.status;
    report.neo_ramsey = multi.neo_ramsey;
    report.last_legal_limit = multi.last_legal_limit;
    report.first_failing_limit = multi.first_failing_limit;
    report.certificates.reserve(multi.certificates.size());
    for (const MultiPartition& mp : multi.certificates) {
        report.certificates.push_back(mp.to_bipartition());
    }
    report.nodes_expanded = multi.nodes_expanded;
    report.elapsed_seconds = multi.elapsed_seconds;
    return report;
}

std::vector<BiPartition> enumerate_legal_partitions(const Thresholds& t, int limit) {
    if (t.color_count() != 2) {
        throw std::invalid_argument("enumerate_legal_partitions needs exactly two thresholds");
    }
    if (limit < 0 || limit > kMaxSearchLimit) {
        throw std::invalid_argument("limit must be in 0.." + std::to_string(kMaxSearchLimit));
    }
    Engine engine;
    engine.thresholds = t.values();
    engine.colors = 2;
    engine.cap = kMaxSearchLimit;
    engine.collect_all = true;
    engine.canonical_prune = false;

    std::vector<Node> frontier{Node{}};
    std::uint64_t calls = 0;
    for (int depth = 0; depth < limit && !frontier.empty(); ++depth) {
        std::vector<Node> next_frontier;
        for (const Node& n : frontier) {
            engine.for_each_child(n, depth, calls,
                                  [&](const Node& child) { next_frontier.push_back(child); });
        }
        frontier = std::move(next_frontier);
    }

    std::vector<BiPartition> out;
    out.reserve(frontier.size());
    for (const Node& n : frontier) {
        out.push_back(node_to_partition(n, limit, 2).to_bipartition());
    }
    std::sort(out.begin(), out.end(), [](const BiPartition& a, const BiPartition& b) {
        return a.a_side < b.a_side;
    });
    return out;
}

}  // namespace neoramsey
