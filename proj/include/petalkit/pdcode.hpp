#pragma once

#include <vector>

namespace petalkit::grid {

// One crossing of an oriented knot diagram. Edge labels run 1..2c
// consecutively along the knot. (a, b, c, d) lists the four incident edges
// counterclockwise starting at the incoming under-strand edge a, so the
// under-strand runs a -> c. sign +1 means the over-strand runs d -> b,
// sign -1 means it runs b -> d.
struct PDCrossing {
    int a, b, c, d;
    int sign;  // +1 or -1
    bool operator==(const PDCrossing&) const = default;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    bool operator==(const PDCode&) const = default;
};

// Throws std::invalid_argument unless the labels form a single oriented
// cycle with consistent under/over successors and the diagram is connected.
void validate_pd(const PDCode& pd);

int writhe(const PDCode& pd);

}  // namespace petalkit::grid
