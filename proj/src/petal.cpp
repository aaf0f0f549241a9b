#include "petalkit/petal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "petalkit/invariants.hpp"

namespace petalkit::petal {

bool petal_valid(const PetalPermutation& pp) {
    int p = static_cast<int>(pp.levels.size());
    if (p < 1 || p % 2 == 0) return false;
    std::vector<bool> seen(p + 1, false);
    for (int v : pp.levels) {
        if (v < 1 || v > p || seen[v]) return false;
        seen[v] = true;
    }
    return pp.levels[0] == 1;
}

void require_valid(const PetalPermutation& pp) {
    if (!petal_valid(pp))
        throw std::invalid_argument("invalid petal permutation");
}

PetalPermutation normalize_petal(std::vector<int> levels) {
    auto it = std::find(levels.begin(), levels.end(), 1);
    if (it == levels.end()) throw std::invalid_argument("level 1 missing");
    std::rotate(levels.begin(), it, levels.end());
    PetalPermutation pp{std::move(levels)};
    require_valid(pp);
    return pp;
}

bool same_petal_projection(const PetalPermutation& a, const PetalPermutation& b) {
    if (!petal_valid(a) || !petal_valid(b)) return false;
    if (a.levels.size() != b.levels.size()) return false;
    if (a == b) return true;
    std::vector<int> rev(a.levels.rbegin(), a.levels.rend());
    return normalize_petal(std::move(rev)) == b;
}

PetalPermutation torus_petal_permutation(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> seq;
    seq.reserve(4 * n + 5);
    seq.push_back(1);
    seq.push_back(3 * n + 4);
    for (int j = 0; j <= n; ++j) {
        seq.push_back(n + 2 - j);
        seq.push_back(3 * n + 3 - j);
    }
    for (int j = 0; j < n; ++j) {
        seq.push_back(4 * n + 5 - j);
        seq.push_back(2 * n + 2 - j);
    }
    seq.push_back(3 * n + 5);
    PetalPermutation pp{std::move(seq)};
    require_valid(pp);
    return pp;
}

grid::GridDiagram petal_to_grid(const PetalPermutation& pp) {
    require_valid(pp);
    int p = static_cast<int>(pp.levels.size());
    if (p < 3) throw std::invalid_argument("petal permutation too short for a grid");

    // Column j holds the arc whose petal index steps by two from the middle
    // petal m = (p+1)/2. The step runs backward when p = 1 (mod 4) and
    // forward when p = 3 (mod 4); both sweeps visit every petal (p is odd),
    // and the parity choice keeps the top stick oriented leftward so the
    // reading rule inverts this construction.
    int m = (p + 1) / 2;
    int step = p % 4 == 1 ? -2 : 2;
    grid::GridDiagram gd;
    gd.size = p;
    gd.x_rows.resize(p);
    gd.o_rows.resize(p);
    for (int j = 0; j < p; ++j) {
        int k = ((m - 1 + step * j) % p + p) % p;  // 0-based arc index
        gd.x_rows[j] = pp.levels[k];
        gd.o_rows[j] = pp.levels[(k + 1) % p];
    }
    grid::require_valid(gd);
    return gd;
}

PetalPermutation read_petal_permutation(const grid::GridDiagram& gd) {
    grid::require_valid(gd);
    int g = gd.size;
    if (g % 2 == 0)
        throw std::invalid_argument("petal reading requires an odd grid size");

    std::vector<int> xcol(g + 1, 0), ocol(g + 1, 0);
    for (int j = 1; j <= g; ++j) {
        xcol[gd.x_rows[j - 1]] = j;
        ocol[gd.o_rows[j - 1]] = j;
    }
    // Natural travel along a row goes O -> X. The top stick must be read
    // leftward; when its X sits right of its O, walk the knot reversed.
    bool forward = xcol[1] < ocol[1];
    std::vector<int> levels;
    levels.reserve(g);
    int row = 1;
    for (int step = 0; step < g; ++step) {
        levels.push_back(row);
        // Move along the column stick at this row's endpoint to the next row.
        int col = forward ? xcol[row] : ocol[row];
        row = forward ? gd.o_rows[col - 1] : gd.x_rows[col - 1];
    }
    PetalPermutation pp{std::move(levels)};
    require_valid(pp);
    return pp;
}

int petal_lower_bound(int alpha) {
    if (alpha < 3)
        throw std::invalid_argument("arc index below 3 is not a nontrivial knot");
    return alpha % 2 == 1 ? alpha : alpha + 1;
}

int arc_index_torus(int r, int s) {
    if (r < 2 || s <= r || std::gcd(r, s) != 1)
        throw std::invalid_argument("torus knot needs coprime 2 <= r < s");
    return r + s;
}

TheoremResult theorem_check(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("theorem applies to odd r >= 3");
    int n = (r - 1) / 2;
    TheoremResult res;
    res.lower = petal_lower_bound(arc_index_torus(r, r + 2));

    PetalPermutation pp = torus_petal_permutation(n);
    grid::GridDiagram gd = petal_to_grid(pp);
    invariants::LaurentPoly alex = grid::alexander_from_grid(gd);
    if (alex != invariants::torus_alexander(r, r + 2))
        throw std::runtime_error(
            "petal construction does not present T(r,r+2): Alexander mismatch");
    res.upper = static_cast<int>(pp.levels.size());
    res.verified = res.lower == res.upper && res.lower == 2 * r + 3;
    return res;
}

}  // namespace petalkit::petal
