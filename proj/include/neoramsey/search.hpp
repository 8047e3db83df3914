#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neoramsey/distance_set.hpp"

namespace neoramsey {

// Engine-wide bound on the limiting number; the incremental state is a
// 64-bit mask per color.
inline constexpr int kMaxSearchLimit = 63;

enum class SearchStatus {
    complete,      // the first failing limit was reached and proven
    cap_exceeded,  // legal partitions were still alive at max_limit_cap
};

struct SearchOptions {
    // Safety cap on the limiting number (1..kMaxSearchLimit). A report with
    // status cap_exceeded is returned if legal partitions still exist there.
    std::optional<int> max_limit_cap;
    // List every legal partition at the last legal limit instead of one
    // canonical representative. Also disables canonicalization.
    bool enumerate_all_certificates = false;
    // When k == l, explore only partitions with 1 in A; the A/B swap maps the
    // pruned half onto the kept half, so results are unaffected.
    bool canonicalize = true;
    int worker_count = 1;
};

struct SearchReport {
    SearchStatus status = SearchStatus::complete;
    // last_legal_limit + 2; meaningful only when status == complete.
    int neo_ramsey = 0;
    int last_legal_limit = 0;
    // last_legal_limit + 1 when complete; 0 when the cap was hit.
    int first_failing_limit = 0;
    // All legal partitions at last_legal_limit (canonically sorted) when
    // enumerate_all_certificates, else the canonically smallest one. When the
    // cap was hit these are the partitions still alive at the cap.
    std::vector<BiPartition> certificates;
    std::uint64_t nodes_expanded = 0;  // incremental legality checks performed
    double elapsed_seconds = 0.0;
};

struct MultiSearchReport {
    SearchStatus status = SearchStatus::complete;
    int neo_ramsey = 0;
    int last_legal_limit = 0;
    int first_failing_limit = 0;
    std::vector<MultiPartition> certificates;
    std::uint64_t nodes_expanded = 0;
    double elapsed_seconds = 0.0;
};

// Grows the limiting number from 0, exploring every partition that keeps the
// (k, l)-property, and stops at the first limit none survives. Requires
// bicolor thresholds. Certificates are re-checked against the full property
// definition before the report is returned.
SearchReport search_neo_ramsey(const Thresholds& t, const SearchOptions& opts = {});

// n-color generalization of search_neo_ramsey; with two colors the report
// matches it field for field (certificates up to representation).
MultiSearchReport search_generalized(const Thresholds& t, const SearchOptions& opts = {});

// Every BiPartition with the given limit satisfying the (k, l)-property, in
// canonical (lexicographic-by-A) order. Deterministic.
std::vector<BiPartition> enumerate_legal_partitions(const Thresholds& t, int limit);

}  // namespace neoramsey
