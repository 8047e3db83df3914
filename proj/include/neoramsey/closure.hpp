#pragma once

#include <optional>
#include <vector>

#include "neoramsey/distance_set.hpp"

namespace neoramsey {

// u together with all pairwise differences of its distinct elements.
// Single pass: differences of differences are not added.
DistanceSet closure(const DistanceSet& u);

// True iff closure(u) == u. Arithmetic progressions are the canonical example.
bool is_closed(const DistanceSet& u);

// Searches `side` for a (t-1)-subset whose closure stays inside `side` and
// returns one if it exists. Such a subset is exactly what the partition
// property below forbids, so the return value doubles as a violation witness.
std::optional<std::vector<int>> find_closure_violation(const DistanceSet& side, int t);

// True iff no (k-1)-subset of A closes inside A and no (l-1)-subset of B
// closes inside B. Vacuously true on a side with fewer than k-1 (resp. l-1)
// elements.
bool has_kl_property(const BiPartition& p, const Thresholds& t);

// Incremental form of has_kl_property: decides whether appending limit+1 to
// the chosen side preserves the property, examining only subsets that contain
// the new element. Requires that p already satisfies the property (subsets
// without the new element are covered by that assumption) and that
// new_element == p.limit + 1; throws std::invalid_argument otherwise.
bool extension_legal(const BiPartition& p, int new_element, Side side, const Thresholds& t);

// n-color generalization: for each color i, no (t_i - 1)-subset of part i may
// close inside part i. Agrees with has_kl_property when there are two parts.
// Throws std::invalid_argument on a color-count mismatch.
bool has_generalized_property(const MultiPartition& p, const Thresholds& t);

}  // namespace neoramsey
