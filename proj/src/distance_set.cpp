#include "neoramsey/distance_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace neoramsey {

namespace {

void check_positive(const std::vector<int>& v) {
    for (int x : v) {
        if (x < 1) {
            throw std::invalid_argument("distance set elements must be >= 1, got " +
                                        std::to_string(x));
        }
    }
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os.str();
}

}  // namespace

DistanceSet::DistanceSet(std::vector<int> elements) : elems_(std::move(elements)) {
    check_positive(elems_);
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
        throw std::invalid_argument("duplicate element in distance set");
    }
}

DistanceSet::DistanceSet(std::initializer_list<int> elements)
    : DistanceSet(std::vector<int>(elements)) {}

DistanceSet DistanceSet::collect(std::vector<int> values) {
    check_positive(values);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    DistanceSet s;
    s.elems_ = std::move(values);
    return s;
}

bool DistanceSet::contains(int d) const {
    return std::binary_search(elems_.begin(), elems_.end(), d);
}

bool DistanceSet::is_subset_of(const DistanceSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                         elems_.end());
}

void DistanceSet::insert(int d) {
    if (d < 1) throw std::invalid_argument("distance set elements must be >= 1");
    auto it = std::lower_bound(elems_.begin(), elems_.end(), d);
    if (it == elems_.end() || *it != d) elems_.insert(it, d);
}

bool DistanceSet::operator<(const DistanceSet& other) const {
    return std::lexicographical_compare(elems_.begin(), elems_.end(),
                                        other.elems_.begin(), other.elems_.end());
}

std::string DistanceSet::to_string() const { return "{" + join_ints(elems_) + "}"; }

namespace {

// Shared cover/disjointness validation: the sets must partition {1..limit}.
void check_cover(int limit, const std::vector<const DistanceSet*>& parts) {
    if (limit < 0) throw std::invalid_argument("partition limit must be >= 0");
    std::vector<int> all;
    for (const auto* p : parts) {
        all.insert(all.end(), p->elements().begin(), p->elements().end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("partition sides are not disjoint");
    }
    if (static_cast<int>(all.size()) != limit ||
        (!all.empty() && (all.front() != 1 || all.back() != limit))) {
        throw std::invalid_argument("partition sides must cover exactly {1.." +
                                    std::to_string(limit) + "}");
    }
}

}  // namespace

BiPartition::BiPartition(int limit, DistanceSet a, DistanceSet b)
    : limit(limit), a_side(std::move(a)), b_side(std::move(b)) {
    check_cover(limit, {&a_side, &b_side});
}

std::string BiPartition::to_string() const {
    return "A = " + a_side.to_string() + ", B = " + b_side.to_string();
}

MultiPartition::MultiPartition(int limit, std::vector<DistanceSet> parts)
    : limit(limit), parts(std::move(parts)) {
    std::vector<const DistanceSet*> ptrs;
    ptrs.reserve(this->parts.size());
    for (const auto& p : this->parts) ptrs.push_back(&p);
    check_cover(limit, ptrs);
}

MultiPartition MultiPartition::from_bipartition(const BiPartition& p) {
    return MultiPartition(p.limit, {p.a_side, p.b_side});
}

BiPartition MultiPartition::to_bipartition() const {
    if (parts.size() != 2) {
        throw std::invalid_argument("expected exactly two parts, got " +
                                    std::to_string(parts.size()));
    }
    return BiPartition(limit, parts[0], parts[1]);
}

std::string MultiPartition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += "A" + std::to_string(i + 1) + " = " + parts[i].to_string();
    }
    return s;
}

Thresholds::Thresholds(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("thresholds must name at least one color");
    for (int v : values_) {
        if (v < 2) {
            throw std::invalid_argument("every threshold must be >= 2, got " +
                                        std::to_string(v));
        }
    }
}

Thresholds::Thresholds(std::initializer_list<int> values)
    : Thresholds(std::vector<int>(values)) {}

int Thresholds::k() const {
    if (values_.size() != 2) throw std::logic_error("k() requires bicolor thresholds");
    return values_[0];
}

int Thresholds::l() const {
    if (values_.size() != 2) throw std::logic_error("l() requires bicolor thresholds");
    return values_[1];
}

std::string Thresholds::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(values_[i]);
    }
    return s + ")";
}

}  // namespace neoramsey
