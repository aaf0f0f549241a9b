#pragma once

#include <string>

#include "json.hpp"

#include "petalkit/braid.hpp"
#include "petalkit/grid.hpp"
#include "petalkit/laurent.hpp"
#include "petalkit/pdcode.hpp"
#include "petalkit/petal.hpp"

// JSON wire formats. Serializers emit ordered_json so field order (and hence
// the printed bytes) are deterministic; parsers throw std::invalid_argument
// on anything that does not match the documented shape.
namespace petalkit::io {

using json = nlohmann::ordered_json;

// {"strands": r, "letters": [[i, s], ...]}, s in {1, -1}
json to_json(const braid::BraidWord& w);
braid::BraidWord braid_from_json(const json& j);

// {"strands": r, "inf": k, "factors": [[1-based image list], ...]}
json to_json(const braid::CanonicalBraid& cb);
braid::CanonicalBraid canonical_from_json(const json& j);

// {"size": g, "x": [...], "o": [...]}, 1-based rows by column
json to_json(const grid::GridDiagram& gd);
grid::GridDiagram grid_from_json(const json& j);

// {"crossings": [[a, b, c, d, "+"|"-"], ...]}
json to_json(const grid::PDCode& pd);
grid::PDCode pd_from_json(const json& j);

// {"levels": [...]}
json to_json(const petal::PetalPermutation& pp);
petal::PetalPermutation petal_from_json(const json& j);

// {"var": "t"|"A", "terms": [[exponent, coefficient], ...]} sorted by exponent
json to_json(const invariants::LaurentPoly& p, const std::string& var = "t");
invariants::LaurentPoly laurent_from_json(const json& j, std::string* var = nullptr);

// Single line, no trailing newline added by the caller's choice.
std::string dump_line(const json& j);

}  // namespace petalkit::io
