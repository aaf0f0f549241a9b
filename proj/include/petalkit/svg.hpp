#pragma once

#include <string>

#include "petalkit/grid.hpp"
#include "petalkit/petal.hpp"

namespace petalkit::render {

// Grid diagram as horizontal/vertical sticks. Verticals always pass over, so
// horizontal sticks are drawn with a gap at every crossing. Row 1 is the top
// row. Output is deterministic byte-for-byte.
std::string grid_svg(const grid::GridDiagram& gd);

// Petal projection as a rose: one lobe per petal around the single
// multi-crossing, tangent-continuous through the center, each lobe labeled
// with the level of the strand that runs into it.
std::string petal_svg(const petal::PetalPermutation& pp);

}  // namespace petalkit::render
