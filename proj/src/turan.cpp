#include "neoramsey/turan.hpp"

#include <stdexcept>

namespace neoramsey {

TuranEdgeCount turan_edge_count(int p, int n) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    TuranEdgeCount out;
    out.r = (p - 1) / (n - 1);
    long long r = out.r;
    out.removed = r * p - static_cast<long long>(n - 1) * r * (r + 1) / 2;
    out.edges = static_cast<long long>(p) * (p - 1) / 2 - out.removed;
    return out;
}

TuranResult turan_construct(int p, int n) {
    TuranEdgeCount count = turan_edge_count(p, n);
    SimpleGraph g(p);
    for (int i = 1; i <= p; ++i) {
        for (int j = i + 1; j <= p; ++j) {
            if ((j - i) % (n - 1) != 0) g.add_edge(i, j);
        }
    }
    return TuranResult{p, n, count.r, count.edges, count.removed, std::move(g)};
}

}  // namespace neoramsey
