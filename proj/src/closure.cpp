#include "neoramsey/closure.hpp"

#include <cstdlib>
#include <stdexcept>

namespace neoramsey {

namespace {

// O(1) membership table over 0..max_element.
std::vector<char> membership(const DistanceSet& s) {
    std::vector<char> in(static_cast<size_t>(s.max_element()) + 1, 0);
    for (int x : s) in[static_cast<size_t>(x)] = 1;
    return in;
}

bool in_table(const std::vector<char>& table, int x) {
    return x >= 0 && x < static_cast<int>(table.size()) && table[static_cast<size_t>(x)];
}

// Depth-first hunt for a subset of `elems` of size `want` whose pairwise
// differences all lie in `table`. Elements are chosen in ascending order, so a
// branch dies as soon as one difference against the chosen prefix escapes the
// table; no superset of that prefix can close inside the side either.
bool find_diff_subset(const std::vector<int>& elems, const std::vector<char>& table,
                      int want, size_t start, std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == want) return true;
    size_t remaining_needed = static_cast<size_t>(want) - chosen.size();
    for (size_t i = start; i + remaining_needed <= elems.size(); ++i) {
        int x = elems[i];
        bool fits = true;
        for (int c : chosen) {
            if (!in_table(table, x - c)) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        chosen.push_back(x);
        if (find_diff_subset(elems, table, want, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

DistanceSet closure(const DistanceSet& u) {
    std::vector<int> out = u.elements();
    const auto& e = u.elements();
    for (size_t i = 0; i < e.size(); ++i) {
        for (size_t j = i + 1; j < e.size(); ++j) {
            out.push_back(e[j] - e[i]);
        }
    }
    return DistanceSet::collect(std::move(out));
}

bool is_closed(const DistanceSet& u) { return closure(u) == u; }

std::optional<std::vector<int>> find_closure_violation(const DistanceSet& side, int t) {
    if (t < 2) throw std::invalid_argument("threshold must be >= 2");
    int want = t - 1;
    if (side.size() < want) return std::nullopt;  // vacuous
    auto table = membership(side);
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(want));
    if (find_diff_subset(side.elements(), table, want, 0, chosen)) return chosen;
    return std::nullopt;
}

bool has_kl_property(const BiPartition& p, const Thresholds& t) {
    return !find_closure_violation(p.a_side, t.k()).has_value() &&
           !find_closure_violation(p.b_side, t.l()).has_value();
}

bool extension_legal(const BiPartition& p, int new_element, Side side, const Thresholds& t) {
    if (new_element != p.limit + 1) {
        throw std::invalid_argument("incremental check expects element " +
                                    std::to_string(p.limit + 1) + ", got " +
                                    std::to_string(new_element));
    }
    const DistanceSet& s = p.side(side);
    int threshold = side == Side::A ? t.k() : t.l();
    int want = threshold - 2;  // partners of the new element inside the old side
    if (want < 0) return false;
    if (want == 0) return false;  // a singleton is closed: a (t-1)=1 subset always violates
    if (s.size() < want) return true;

    auto table = membership(s);
    // Only elements pairing with the new one stay candidates: u and
    // new_element sit together in a violating subset only if their
    // difference lands back in the side.
    std::vector<int> candidates;
    for (int u : s) {
        if (in_table(table, new_element - u)) candidates.push_back(u);
    }
    std::vector<int> chosen;
    return !find_diff_subset(candidates, table, want, 0, chosen);
}

bool has_generalized_property(const MultiPartition& p, const Thresholds& t) {
    if (t.color_count() != static_cast<int>(p.parts.size())) {
        throw std::invalid_argument("thresholds name " + std::to_string(t.color_count()) +
                                    " colors but the partition has " +
                                    std::to_string(p.parts.size()) + " parts");
    }
    for (int i = 0; i < t.color_count(); ++i) {
        if (find_closure_violation(p.parts[static_cast<size_t>(i)], t[i]).has_value()) {
            return false;
        }
    }
    return true;
}

}  // namespace neoramsey
