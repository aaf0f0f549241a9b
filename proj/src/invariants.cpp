#include "petalkit/invariants.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace petalkit::invariants {

using grid::PDCode;
using grid::PDCrossing;

namespace {

// Union-find over edge labels; arcs are maximal runs of edges joined across
// over-passes.
struct ArcFinder {
    std::vector<int> parent;
    explicit ArcFinder(int n2) : parent(n2 + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LaurentPoly alexander_from_pd_choice(const PDCode& pd, int drop_row, int drop_col) {
    grid::validate_pd(pd);
    int c = static_cast<int>(pd.crossings.size());
    if (c == 0) return LaurentPoly(1);
    int n2 = 2 * c;

    ArcFinder arcs(n2);
    for (const PDCrossing& x : pd.crossings) {
        int over_in = x.sign > 0 ? x.d : x.b;
        int over_out = x.sign > 0 ? x.b : x.d;
        arcs.join(over_in, over_out);
    }
    // Index the arcs; a knot diagram with c crossings has exactly c arcs.
    std::vector<int> arc_id(n2 + 1, -1);
    int arc_count = 0;
    for (int e = 1; e <= n2; ++e) {
        int root = arcs.find(e);
        if (arc_id[root] < 0) arc_id[root] = arc_count++;
        arc_id[e] = arc_id[root];
    }
    if (arc_count != c)
        throw std::invalid_argument("diagram does not have one arc per crossing");
    if (drop_row < 0 || drop_row >= c || drop_col < 0 || drop_col >= c)
        throw std::invalid_argument("deleted row/column out of range");

    // Fox derivatives of the Wirtinger relator at each crossing:
    //   d/d(over) = 1 - t^s,  d/d(under-in) = t^s,  d/d(under-out) = -1,
    // with s the crossing sign. Entries accumulate when arcs coincide.
    LaurentMatrix m(c - 1, std::vector<LaurentPoly>(c - 1));
    auto put = [&](int row, int col, const LaurentPoly& v) {
        if (row == drop_row || col == drop_col) return;
        int r = row > drop_row ? row - 1 : row;
        int cc = col > drop_col ? col - 1 : col;
        m[r][cc] += v;
    };
    LaurentPoly one(1);
    for (int i = 0; i < c; ++i) {
        const PDCrossing& x = pd.crossings[i];
        int over = arc_id[x.sign > 0 ? x.b : x.d];
        int under_in = arc_id[x.a];
        int under_out = arc_id[x.c];
        LaurentPoly ts = LaurentPoly::term(1, x.sign);
        put(i, over, one - ts);
        put(i, under_in, ts);
        put(i, under_out, LaurentPoly(-1));
    }
    LaurentPoly det = det_laurent(m);
    if (det.is_zero())
        throw std::runtime_error("vanishing Alexander determinant on a knot diagram");
    return normalize_alexander(det);
}

LaurentPoly alexander_from_pd(const PDCode& pd) {
    if (pd.crossings.empty()) return LaurentPoly(1);
    return alexander_from_pd_choice(pd, 0, 0);
}

LaurentPoly kauffman_bracket(const PDCode& pd, int max_crossings) {
    grid::validate_pd(pd);
    int c = static_cast<int>(pd.crossings.size());
    if (c > max_crossings)
        throw std::invalid_argument("crossing count " + std::to_string(c) +
                                    " exceeds the cap of " +
                                    std::to_string(max_crossings));
    if (c == 0) return LaurentPoly(1);
    int n2 = 2 * c;

    // Slots (a,b,c,d) run counterclockwise from the incoming under-edge, so
    // the A-smoothing (rotate the under-strand counterclockwise onto the
    // over-strand) always joins (a,b) and (c,d), whatever the crossing sign;
    // the B-smoothing is the other pairing. Count loops per state with a
    // fresh union-find.
    LaurentPoly delta = LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);
    LaurentPoly total;
    std::vector<int> parent(n2 + 1);
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto join = [&](int a, int b) { parent[find(a)] = find(b); };
        int na = 0;
        for (int i = 0; i < c; ++i) {
            const PDCrossing& x = pd.crossings[i];
            bool a_smoothing = (mask >> i) & 1u;
            if (a_smoothing) ++na;
            if (a_smoothing) {
                join(x.a, x.b);
                join(x.c, x.d);
            } else {
                join(x.a, x.d);
                join(x.b, x.c);
            }
        }
        int loops = 0;
        for (int e = 1; e <= n2; ++e)
            if (find(e) == e) ++loops;
        LaurentPoly term = LaurentPoly::term(1, na - (c - na));
        for (int l = 1; l < loops; ++l) term = term * delta;
        total += term;
    }
    return total;
}

LaurentPoly jones(const PDCode& pd, int max_crossings) {
    LaurentPoly bracket = kauffman_bracket(pd, max_crossings);
    int w = grid::writhe(pd);
    // (-A^3)^(-w)
    LaurentPoly factor = LaurentPoly::term((w % 2 == 0) ? 1 : -1, -3 * w);
    return factor * bracket;
}

LaurentPoly torus_alexander(int p, int q) {
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus knot needs coprime 2 <= p < q");
    LaurentPoly one(1);
    auto tn = [](int n) { return LaurentPoly::term(1, n); };
    LaurentPoly num = (tn(p * q) - one) * (tn(1) - one);
    LaurentPoly den = (tn(p) - one) * (tn(q) - one);
    return normalize_alexander(exact_div(num, den));
}

LaurentPoly torus_jones(int p, int q) {
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus knot needs coprime 2 <= p < q");
    LaurentPoly one(1);
    auto tn = [](int n) { return LaurentPoly::term(1, n); };
    LaurentPoly num = one - tn(p + 1) - tn(q + 1) + tn(p + q);
    LaurentPoly quotient = exact_div(num, one - tn(2));
    return quotient.shifted((p - 1) * (q - 1) / 2);
}

LaurentPoly jones_t_to_A(const LaurentPoly& in_t) {
    return in_t.scaled_exponents(-4);
}

}  // namespace petalkit::invariants
