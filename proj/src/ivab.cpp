#include "neoramsey/ivab.hpp"

#include <sstream>
#include <stdexcept>

namespace neoramsey {

IVABTable render_ivab(const SimpleGraph& g) {
    int p = g.vertex_count();
    IVABTable table;
    table.rows.resize(static_cast<size_t>(p > 0 ? p - 1 : 0));
    for (int j = 1; j <= p - 1; ++j) {
        auto& row = table.rows[static_cast<size_t>(j - 1)];
        row.reserve(static_cast<size_t>(p - j));
        for (int k = j + 1; k <= p; ++k) {
            row.push_back({k, !g.adjacent(j, k)});
        }
    }
    return table;
}

std::string ivab_to_text(const IVABTable& table) {
    std::ostringstream os;
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            os << row[i].label;
            if (row[i].starred) os << '*';
        }
        os << '\n';
    }
    return os.str();
}

IVABTable ivab_from_text(const std::string& text) {
    IVABTable table;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos && table.rows.empty()) {
            continue;  // leading blank lines
        }
        std::istringstream ls(line);
        std::vector<IVABTable::Entry> row;
        std::string token;
        while (ls >> token) {
            bool starred = false;
            if (!token.empty() && token.back() == '*') {
                starred = true;
                token.pop_back();
            }
            size_t consumed = 0;
            int label = 0;
            try {
                label = std::stoi(token, &consumed);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad bitableau entry '" + token + "'");
            }
            if (consumed != token.size() || label < 2) {
                throw std::invalid_argument("bad bitableau entry '" + token + "'");
            }
            row.push_back({label, starred});
        }
        if (row.empty()) {
            throw std::invalid_argument("blank bitableau row");
        }
        table.rows.push_back(std::move(row));
    }

    // The first row fixes p; row j must then list exactly j+1..p.
    int p = table.vertex_count();
    if (!table.rows.empty()) {
        p = static_cast<int>(table.rows.front().size()) + 1;
        if (static_cast<int>(table.rows.size()) != p - 1) {
            throw std::invalid_argument("bitableau needs " + std::to_string(p - 1) +
                                        " rows for " + std::to_string(p) + " vertices");
        }
    }
    for (int j = 1; j <= static_cast<int>(table.rows.size()); ++j) {
        const auto& row = table.rows[static_cast<size_t>(j - 1)];
        if (static_cast<int>(row.size()) != p - j) {
            throw std::invalid_argument("row " + std::to_string(j) + " must have " +
                                        std::to_string(p - j) + " entries");
        }
        for (int idx = 0; idx < static_cast<int>(row.size()); ++idx) {
            if (row[static_cast<size_t>(idx)].label != j + 1 + idx) {
                throw std::invalid_argument("row " + std::to_string(j) +
                                            " must list vertices " + std::to_string(j + 1) +
                                            ".." + std::to_string(p) + " in order");
            }
        }
    }
    return table;
}

SimpleGraph ivab_to_graph(const IVABTable& table) {
    int p = table.vertex_count();
    SimpleGraph g(p);
    for (int j = 1; j <= static_cast<int>(table.rows.size()); ++j) {
        for (const auto& e : table.rows[static_cast<size_t>(j - 1)]) {
            if (!e.starred) g.add_edge(j, e.label);
        }
    }
    return g;
}

}  // namespace neoramsey
