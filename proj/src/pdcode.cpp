#include "petalkit/pdcode.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace petalkit::grid {

void validate_pd(const PDCode& pd) {
    int c = static_cast<int>(pd.crossings.size());
    if (c == 0) return;  // 0-crossing unknot diagram
    int n2 = 2 * c;
    auto next = [n2](int e) { return e % n2 + 1; };

    std::vector<int> uses(n2 + 1, 0);
    for (const PDCrossing& x : pd.crossings) {
        for (int e : {x.a, x.b, x.c, x.d}) {
            if (e < 1 || e > n2)
                throw std::invalid_argument("edge label out of range");
            ++uses[e];
        }
        if (x.sign != 1 && x.sign != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
        if (next(x.a) != x.c)
            throw std::invalid_argument("under-strand edges are not consecutive");
        int over_in = x.sign > 0 ? x.d : x.b;
        int over_out = x.sign > 0 ? x.b : x.d;
        if (next(over_in) != over_out)
            throw std::invalid_argument("over-strand edges are not consecutive");
    }
    for (int e = 1; e <= n2; ++e)
        if (uses[e] != 2)
            throw std::invalid_argument("each edge label must appear exactly twice");

    // Connectivity of the diagram: crossings sharing an edge are adjacent.
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<int> owner(n2 + 1, -1);
    for (int i = 0; i < c; ++i)
        for (int e : {pd.crossings[i].a, pd.crossings[i].b, pd.crossings[i].c,
                      pd.crossings[i].d}) {
            if (owner[e] < 0)
                owner[e] = i;
            else
                parent[find(owner[e])] = find(i);
        }
    for (int i = 1; i < c; ++i)
        if (find(i) != find(0))
            throw std::invalid_argument("diagram is disconnected");
}

int writhe(const PDCode& pd) {
    int w = 0;
    for (const PDCrossing& x : pd.crossings) w += x.sign;
    return w;
}

}  // namespace petalkit::grid
