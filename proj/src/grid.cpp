#include "petalkit/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "petalkit/invariants.hpp"

namespace petalkit::grid {

namespace {

bool is_permutation(const std::vector<int>& v, int g) {
    if (static_cast<int>(v.size()) != g) return false;
    std::vector<bool> seen(g + 1, false);
    for (int x : v) {
        if (x < 1 || x > g || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

// Column of the X (resp. O) in each row, 1-based.
std::vector<int> cols_by_row(const std::vector<int>& rows, int g) {
    std::vector<int> col(g + 1, 0);
    for (int j = 1; j <= g; ++j) col[rows[j - 1]] = j;
    return col;
}

}  // namespace

bool grid_valid(const GridDiagram& gd) {
    int g = gd.size;
    if (g < 2) return false;
    if (!is_permutation(gd.x_rows, g) || !is_permutation(gd.o_rows, g)) return false;
    for (int j = 0; j < g; ++j)
        if (gd.x_rows[j] == gd.o_rows[j]) return false;
    // Single-cycle knot condition: follow column j down its O, then along
    // that row to its X, which sits in some column j'.
    std::vector<int> xcol = cols_by_row(gd.x_rows, g);
    int at = 1, steps = 0;
    do {
        at = xcol[gd.o_rows[at - 1]];
        ++steps;
    } while (at != 1 && steps <= g);
    return steps == g;
}

void require_valid(const GridDiagram& gd) {
    if (!grid_valid(gd)) throw std::invalid_argument("invalid grid diagram");
}

GridDiagram minimal_torus_grid(int p, int q) {
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus grid needs coprime 2 <= p < q");
    int g = p + q;
    GridDiagram gd;
    gd.size = g;
    gd.x_rows.resize(g);
    gd.o_rows.resize(g);
    for (int j = 1; j <= g; ++j) {
        gd.o_rows[j - 1] = j;
        gd.x_rows[j - 1] = (j + p - 1) % g + 1;
    }
    return gd;
}

GridDiagram cyclic_col_shift(const GridDiagram& gd) {
    require_valid(gd);
    GridDiagram out = gd;
    std::rotate(out.x_rows.rbegin(), out.x_rows.rbegin() + 1, out.x_rows.rend());
    std::rotate(out.o_rows.rbegin(), out.o_rows.rbegin() + 1, out.o_rows.rend());
    return out;
}

GridDiagram cyclic_row_shift(const GridDiagram& gd) {
    require_valid(gd);
    GridDiagram out = gd;
    for (int& v : out.x_rows) v = v % gd.size + 1;
    for (int& v : out.o_rows) v = v % gd.size + 1;
    return out;
}

PDCode grid_to_pd(const GridDiagram& gd) {
    require_valid(gd);
    int g = gd.size;
    std::vector<int> xcol = cols_by_row(gd.x_rows, g);
    std::vector<int> ocol = cols_by_row(gd.o_rows, g);

    // Crossing passages in traversal order. The knot is walked column stick
    // (X -> O), then the row stick of the O's row (O -> X), starting from
    // column 1. Directions are in y-up coordinates (row numbers grow down).
    struct Passage {
        int row, col;    // crossing position
        bool under;      // horizontal passes under
        int dx, dy;      // travel direction
    };
    std::vector<Passage> passages;
    int col = 1;
    for (int step = 0; step < g; ++step) {
        int r1 = gd.x_rows[col - 1], r2 = gd.o_rows[col - 1];
        int dir = r2 > r1 ? 1 : -1;  // row direction of travel
        for (int i = r1 + dir; i != r2; i += dir) {
            int lo = std::min(xcol[i], ocol[i]), hi = std::max(xcol[i], ocol[i]);
            if (lo < col && col < hi)
                passages.push_back({i, col, false, 0, -dir});
        }
        int row = r2;
        int c1 = ocol[row], c2 = xcol[row];
        int cdir = c2 > c1 ? 1 : -1;
        for (int j = c1 + cdir; j != c2; j += cdir) {
            int lo = std::min(gd.x_rows[j - 1], gd.o_rows[j - 1]);
            int hi = std::max(gd.x_rows[j - 1], gd.o_rows[j - 1]);
            if (lo < row && row < hi)
                passages.push_back({row, j, true, cdir, 0});
        }
        col = c2;
    }

    int n2 = static_cast<int>(passages.size());
    PDCode pd;
    if (n2 == 0) return pd;

    // Edge e enters passage e (1-based); pair the two passages at each
    // lattice point into one crossing.
    std::map<std::pair<int, int>, std::pair<int, int>> at;  // (row,col) -> passage ids
    for (int i = 0; i < n2; ++i) {
        auto key = std::make_pair(passages[i].row, passages[i].col);
        auto [it, inserted] = at.try_emplace(key, i, -1);
        if (!inserted) it->second.second = i;
    }
    for (const auto& [pos, ids] : at) {
        const Passage& p1 = passages[ids.first];
        const Passage& p2 = passages[ids.second];
        const Passage& under = p1.under ? p1 : p2;
        const Passage& over = p1.under ? p2 : p1;
        int ua_in = (p1.under ? ids.first : ids.second) + 1;
        int ov_in = (p1.under ? ids.second : ids.first) + 1;
        int ua_out = ua_in % n2 + 1;
        int ov_out = ov_in % n2 + 1;
        int sign = over.dx * under.dy - over.dy * under.dx;
        // Slots counterclockwise from the under-in edge: a points along -u,
        // so b's slot direction is -u rotated +90 degrees, i.e. (u_y, -u_x).
        int bx = under.dy, by = -under.dx;
        int b_edge, d_edge;
        if (bx == over.dx && by == over.dy) {
            b_edge = ov_out;
            d_edge = ov_in;
        } else {
            b_edge = ov_in;
            d_edge = ov_out;
        }
        pd.crossings.push_back({ua_in, b_edge, ua_out, d_edge, sign});
    }
    validate_pd(pd);
    return pd;
}

PetalFormInfo petal_form_info(const GridDiagram& gd) {
    require_valid(gd);
    int g = gd.size;
    if (g % 2 == 0)
        throw std::invalid_argument("petal form requires an odd grid size");
    PetalFormInfo info;
    info.r = (g - 3) / 2;
    if (info.r < 1 || info.r % 2 == 0) return info;  // size must be 2r+3, r odd

    std::vector<int> xcol = cols_by_row(gd.x_rows, g);
    std::vector<int> ocol = cols_by_row(gd.o_rows, g);
    info.row_lengths.assign(g + 1, 0);
    for (int i = 1; i <= g; ++i)
        info.row_lengths[i] = std::abs(xcol[i] - ocol[i]);

    int inflections = 0;
    for (int j = 1; j <= g; ++j) {
        int len_x = info.row_lengths[gd.x_rows[j - 1]];
        int len_o = info.row_lengths[gd.o_rows[j - 1]];
        if (len_x == info.r + 1 && len_o == info.r + 1) {
            ++inflections;
            info.inflection_col = j;
            info.inflection_top_row = std::min(gd.x_rows[j - 1], gd.o_rows[j - 1]);
        } else if (std::minmax(len_x, len_o) !=
                   std::minmax(info.r + 1, info.r + 2)) {
            return info;  // some stick has a disallowed adjacent length
        }
    }
    info.ok = inflections == 1;
    return info;
}

bool is_petal_form(const GridDiagram& gd) { return petal_form_info(gd).ok; }

invariants::LaurentPoly alexander_from_grid(const GridDiagram& gd) {
    return invariants::alexander_from_pd(grid_to_pd(gd));
}

}  // namespace petalkit::grid
