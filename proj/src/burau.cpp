#include <stdexcept>

#include "petalkit/braid.hpp"

namespace petalkit::braid {

using invariants::LaurentMatrix;
using invariants::LaurentPoly;

namespace {

// Reduced Burau matrix of one letter, size (r-1) x (r-1).
LaurentMatrix letter_matrix(int r, int index, int sign) {
    int n = r - 1;
    LaurentMatrix m = invariants::identity_matrix(n);
    LaurentPoly t = LaurentPoly::var();
    LaurentPoly tinv = LaurentPoly::term(1, -1);
    int i = index;  // 1-based generator index; matrix indices below are 0-based
    if (sign > 0) {
        m[i - 1][i - 1] = -t;
        if (i - 2 >= 0) m[i - 2][i - 1] = t;
        if (i < n) m[i][i - 1] = LaurentPoly(1);
    } else {
        m[i - 1][i - 1] = -tinv;
        if (i - 2 >= 0) m[i - 2][i - 1] = LaurentPoly(1);
        if (i < n) m[i][i - 1] = tinv;
    }
    return m;
}

}  // namespace

LaurentMatrix burau_reduced(const BraidWord& w) {
    LaurentMatrix m = invariants::identity_matrix(w.strands() - 1);
    for (const Letter& l : w.letters())
        m = invariants::mat_mul(m, letter_matrix(w.strands(), l.index, l.sign));
    return m;
}

LaurentPoly alexander_from_braid(const BraidWord& w) {
    if (!is_knot_closure(w))
        throw std::invalid_argument("braid closure is not a knot");
    int r = w.strands();
    LaurentMatrix m = burau_reduced(w);
    int n = r - 1;
    for (int i = 0; i < n; ++i) m[i][i] -= LaurentPoly(1);
    LaurentPoly det = invariants::det_laurent(m);  // = +-t^a Alexander * (1-t^r)/(1-t)
    LaurentPoly one(1);
    LaurentPoly t = LaurentPoly::var();
    LaurentPoly tr = LaurentPoly::term(1, r);
    LaurentPoly quotient = invariants::exact_div(det * (one - t), one - tr);
    return invariants::normalize_alexander(quotient);
}

}  // namespace petalkit::braid
