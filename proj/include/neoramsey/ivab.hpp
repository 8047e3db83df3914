#pragma once

#include <string>
#include <vector>

#include "neoramsey/graph.hpp"

namespace neoramsey {

// Increasing vertex adjacency bitableau: row j lists vertices j+1..p in
// order, starring exactly the ones nonadjacent to j.
struct IVABTable {
    struct Entry {
        int label = 0;
        bool starred = false;  // starred == nonadjacent
        bool operator==(const Entry&) const = default;
    };

    std::vector<std::vector<Entry>> rows;  // rows[j-1] covers vertex j

    int vertex_count() const { return static_cast<int>(rows.size()) + 1; }
    bool operator==(const IVABTable&) const = default;
};

IVABTable render_ivab(const SimpleGraph& g);

// One line per row, entries space-separated, nonadjacency marked by a
// trailing asterisk: "3 4* 5*". This text form is bit-exact.
std::string ivab_to_text(const IVABTable& table);

// Inverse of ivab_to_text; empty input parses as the one-vertex table.
// Throws std::invalid_argument on malformed rows.
IVABTable ivab_from_text(const std::string& text);

SimpleGraph ivab_to_graph(const IVABTable& table);

}  // namespace neoramsey
