#pragma once

#include <vector>

#include "petalkit/grid.hpp"

namespace petalkit::petal {

// Level sequence read clockwise halfway around the single multi-crossing of
// a petal projection. Always odd length, a permutation of {1..p}, normalized
// to begin with level 1.
struct PetalPermutation {
    std::vector<int> levels;
    bool operator==(const PetalPermutation&) const = default;
};

bool petal_valid(const PetalPermutation& pp);
void require_valid(const PetalPermutation& pp);

// Rotate a raw level sequence so it starts with 1.
PetalPermutation normalize_petal(std::vector<int> levels);

// Equality up to rotation and reflection of the reading (helper predicate;
// plain operator== is exact sequence equality).
bool same_petal_projection(const PetalPermutation& a, const PetalPermutation& b);

// The (4n+5)-petal permutation of T_{2n+1,2n+3}:
// (1, 3n+4, [n+2-j, 3n+3-j] for j=0..n, [4n+5-j, 2n+2-j] for j=0..n-1, 3n+5).
PetalPermutation torus_petal_permutation(int n);

// Arc presentation of the petal projection as a grid diagram. Petal k is the
// arc between levels[k] and levels[k+1]; arcs are laid out in the angular
// order that steps through the petals two at a time starting from the middle
// one, which realizes every valid petal permutation and reproduces the
// published grids on the torus family. X marks the earlier endpoint.
grid::GridDiagram petal_to_grid(const PetalPermutation& pp);

// Read the level sequence back off an odd-size grid: start at the top
// horizontal stick oriented leftward, record the row of every horizontal
// stick along the knot. Inverse of petal_to_grid on its image.
PetalPermutation read_petal_permutation(const grid::GridDiagram& gd);

// Proposition-level arithmetic.
int petal_lower_bound(int alpha);        // alpha odd -> alpha, even -> alpha+1
int arc_index_torus(int r, int s);       // = r + s

struct TheoremResult {
    int lower = 0;
    int upper = 0;
    bool verified = false;
    bool operator==(const TheoremResult&) const = default;
};

// lower = petal_lower_bound(arc_index_torus(r, r+2)); upper = length of the
// generated petal permutation, accepted only after the grid's Alexander
// polynomial matches the torus oracle. Throws on an invariant mismatch.
TheoremResult theorem_check(int r);

}  // namespace petalkit::petal
