#pragma once

#include "petalkit/laurent.hpp"
#include "petalkit/matrix.hpp"
#include "petalkit/pdcode.hpp"

namespace petalkit::invariants {

// Alexander polynomial via Fox calculus on the Wirtinger presentation of the
// diagram: one relator row per crossing over the arc generators, one row and
// one column deleted, determinant normalized. Input must be a connected
// one-component diagram.
LaurentPoly alexander_from_pd(const grid::PDCode& pd);

// As above but deleting the given relator row and generator column
// (0-based); exposed so tests can confirm the choice does not matter.
LaurentPoly alexander_from_pd_choice(const grid::PDCode& pd, int drop_row, int drop_col);

// Kauffman bracket in the variable A, with <unknot> = 1. State sum over all
// 2^c smoothings; refuses diagrams above the crossing cap.
LaurentPoly kauffman_bracket(const grid::PDCode& pd, int max_crossings = 24);

// (-A^3)^(-writhe) * bracket: the Jones polynomial in the bracket variable A.
// The substitution t = A^-4 carries it to the usual variable.
LaurentPoly jones(const grid::PDCode& pd, int max_crossings = 24);

// Closed-form oracles for the torus knot T_{p,q}, 2 <= p < q coprime.
// torus_alexander is normalized; torus_jones uses the right-handed values
// (positive crossings), in the variable t.
LaurentPoly torus_alexander(int p, int q);
LaurentPoly torus_jones(int p, int q);

// Substitute t = A^-4 (exponents scale by -4), e.g. to compare torus_jones
// with the bracket-variable jones().
LaurentPoly jones_t_to_A(const LaurentPoly& in_t);

}  // namespace petalkit::invariants
