#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace neoramsey {

// Finite set of positive integers interpreted as vertex-label differences
// (graph distances). Elements are kept sorted and unique.
class DistanceSet {
public:
    DistanceSet() = default;
    // Throws std::invalid_argument on non-positive or duplicate elements.
    explicit DistanceSet(std::vector<int> elements);
    DistanceSet(std::initializer_list<int> elements);

    // Builds a set from arbitrary values, silently sorting and deduplicating.
    // Still rejects non-positive values.
    static DistanceSet collect(std::vector<int> values);

    bool contains(int d) const;
    bool is_subset_of(const DistanceSet& other) const;
    void insert(int d);

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    int max_element() const { return elems_.empty() ? 0 : elems_.back(); }
    const std::vector<int>& elements() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const DistanceSet&) const = default;
    // Canonical order: lexicographic on the sorted element sequence,
    // with a strict prefix sorting first.
    bool operator<(const DistanceSet& other) const;

    std::string to_string() const;  // "{1, 4}"

private:
    std::vector<int> elems_;
};

enum class Side { A, B };

// Disjoint pair of distance sets covering {1..limit}. The search state and
// certificate payload for the two-color case.
struct BiPartition {
    int limit = 0;
    DistanceSet a_side;
    DistanceSet b_side;

    BiPartition() = default;
    // Throws std::invalid_argument unless a_side and b_side are disjoint and
    // their union is exactly {1..limit}.
    BiPartition(int limit, DistanceSet a, DistanceSet b);

    const DistanceSet& side(Side s) const { return s == Side::A ? a_side : b_side; }

    bool operator==(const BiPartition&) const = default;
    std::string to_string() const;
};

// Ordered list of pairwise disjoint distance sets covering {1..limit}.
struct MultiPartition {
    int limit = 0;
    std::vector<DistanceSet> parts;

    MultiPartition() = default;
    // Throws std::invalid_argument unless parts are pairwise disjoint and
    // their union is exactly {1..limit}.
    MultiPartition(int limit, std::vector<DistanceSet> parts);

    static MultiPartition from_bipartition(const BiPartition& p);
    // Requires exactly two parts.
    BiPartition to_bipartition() const;

    bool operator==(const MultiPartition&) const = default;
    std::string to_string() const;
};

// Clique sizes per color; the bicolor case is the pair (k, l).
class Thresholds {
public:
    // Throws std::invalid_argument if empty or any value is < 2.
    explicit Thresholds(std::vector<int> values);
    Thresholds(std::initializer_list<int> values);
    static Thresholds pair(int k, int l) { return Thresholds{k, l}; }

    int color_count() const { return static_cast<int>(values_.size()); }
    int operator[](int color) const { return values_.at(static_cast<size_t>(color)); }
    const std::vector<int>& values() const { return values_; }

    // Bicolor accessors; require exactly two values.
    int k() const;
    int l() const;

    bool operator==(const Thresholds&) const = default;
    std::string to_string() const;  // "(3, 4)"

private:
    std::vector<int> values_;
};

}  // namespace neoramsey
