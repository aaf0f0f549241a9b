#pragma once

#include <vector>

#include "petalkit/laurent.hpp"

namespace petalkit::invariants {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix identity_matrix(int n);
LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
bool mat_equal(const LaurentMatrix& a, const LaurentMatrix& b);

// Exact determinant. Fraction-free Bareiss elimination for small sizes;
// above the cutoff, modular evaluation-interpolation with a CRT lift whose
// prime count is chosen from a rigorous coefficient bound.
LaurentPoly det_laurent(const LaurentMatrix& m);

// The two strategies, exposed for cross-checking in tests.
LaurentPoly det_bareiss(const LaurentMatrix& m);
LaurentPoly det_modular(const LaurentMatrix& m);
LaurentPoly det_cofactor(const LaurentMatrix& m);  // O(n!) oracle, tiny n only

}  // namespace petalkit::invariants
