#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "petalkit/grid.hpp"

// Shared helpers for the test suites only; nothing here is library API.
namespace testsupport {

// Commutation move: exchange two adjacent columns whose row spans are
// disjoint or strictly nested. Returns nullopt when the move does not apply
// (interleaved or touching spans change the knot).
inline std::optional<petalkit::grid::GridDiagram> commute_columns(
    const petalkit::grid::GridDiagram& gd, int j) {
    using petalkit::grid::GridDiagram;
    if (j < 1 || j >= gd.size) return std::nullopt;
    int a1 = std::min(gd.x_rows[j - 1], gd.o_rows[j - 1]);
    int b1 = std::max(gd.x_rows[j - 1], gd.o_rows[j - 1]);
    int a2 = std::min(gd.x_rows[j], gd.o_rows[j]);
    int b2 = std::max(gd.x_rows[j], gd.o_rows[j]);
    bool disjoint = b1 < a2 || b2 < a1;
    bool nested = (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
    if (!disjoint && !nested) return std::nullopt;
    GridDiagram out = gd;
    std::swap(out.x_rows[j - 1], out.x_rows[j]);
    std::swap(out.o_rows[j - 1], out.o_rows[j]);
    return out;
}

// Random single-knot grid diagram by rejection sampling.
inline petalkit::grid::GridDiagram random_knot_grid(std::mt19937& rng, int size) {
    petalkit::grid::GridDiagram gd;
    gd.size = size;
    gd.x_rows.resize(size);
    gd.o_rows.resize(size);
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = i + 1;
    while (true) {
        std::shuffle(perm.begin(), perm.end(), rng);
        gd.x_rows = perm;
        std::shuffle(perm.begin(), perm.end(), rng);
        gd.o_rows = perm;
        if (petalkit::grid::grid_valid(gd)) return gd;
    }
}

}  // namespace testsupport
