#pragma once

#include <vector>

#include "petalkit/laurent.hpp"
#include "petalkit/pdcode.hpp"

namespace petalkit::grid {

// Grid diagram: one X and one O per row and per column, X != O in every
// column. Rows are numbered 1..size top to bottom; x_rows[j-1] is the row of
// the X in column j. Column sticks run X -> O, row sticks run O -> X, and
// vertical sticks always cross over horizontal ones.
struct GridDiagram {
    int size = 0;
    std::vector<int> x_rows;
    std::vector<int> o_rows;
    bool operator==(const GridDiagram&) const = default;
};

bool grid_valid(const GridDiagram& gd);
void require_valid(const GridDiagram& gd);  // throws std::invalid_argument

// The cyclic staircase grid of T_{p,q}: o_rows[j] = j,
// x_rows[j] = ((j + p - 1) mod (p+q)) + 1. Size p+q = arc index.
GridDiagram minimal_torus_grid(int p, int q);

// Move the last column to the front / the last row to the top (around the
// back of the diagram); both preserve validity and the knot type.
GridDiagram cyclic_col_shift(const GridDiagram& gd);
GridDiagram cyclic_row_shift(const GridDiagram& gd);

// Crossing diagram of the grid: one crossing wherever a vertical stick
// strictly spans a row whose horizontal stick strictly spans that column.
PDCode grid_to_pd(const GridDiagram& gd);

// Petal-form check for odd-size grids (size = 2r+3, r odd): exactly one
// vertical stick whose two adjacent horizontal sticks both have length r+1
// (the inflection stick), all others adjacent to lengths {r+1, r+2}.
bool is_petal_form(const GridDiagram& gd);

// Richer view of the same computation, for structural assertions.
struct PetalFormInfo {
    bool ok = false;
    int r = 0;
    int inflection_col = 0;        // 1-based column of the inflection stick
    int inflection_top_row = 0;    // upper row of that stick
    std::vector<int> row_lengths;  // horizontal stick lengths by row, 1-based
};
PetalFormInfo petal_form_info(const GridDiagram& gd);

invariants::LaurentPoly alexander_from_grid(const GridDiagram& gd);

}  // namespace petalkit::grid
