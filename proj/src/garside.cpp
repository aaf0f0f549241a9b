#include <algorithm>
#include <stdexcept>

#include "petalkit/braid.hpp"

// Garside left normal form over permutation braids.
//
// Factors are stored as their permutations under the same homomorphism phi
// used by underlying_permutation: phi(a b) = phi(a) o phi(b). Under this
// convention a permutation braid A can start with sigma_i exactly when i is
// a descent of phi(A)^-1, and can end with sigma_i exactly when i is a
// descent of phi(A). The local slide moves sigma_i across a factor boundary:
//   phi(A) <- phi(A) o s_i,   phi(B) <- s_i o phi(B).
// A negative letter sigma_i^-1 enters as Delta^-1 * (Delta sigma_i^-1), whose
// permutation is delta o s_i; the Delta^-1 travels to the front by flipping
// every factor to its conjugate delta o phi o delta.

namespace petalkit::braid {

namespace {

bool is_descent(const Perm& p, int i) { return p(i) > p(i + 1); }

Perm flip(const Perm& p) {
    Perm d = Perm::reversal(p.n());
    return d * p * d;
}

// Make the pair (a, b) left-weighted in place; true if anything moved.
bool slide_pair(Perm& a, Perm& b) {
    bool moved = false;
    Perm binv = b.inverse();
    for (bool progress = true; progress;) {
        progress = false;
        for (int i = 1; i < a.n(); ++i) {
            if (is_descent(binv, i) && !is_descent(a, i)) {
                Perm s = Perm::transposition(a.n(), i);
                a = a * s;
                b = s * b;
                binv = binv * s;
                progress = moved = true;
            }
        }
    }
    return moved;
}

}  // namespace

std::vector<int> starting_set(const Perm& a) { return a.inverse().descents(); }

std::vector<int> finishing_set(const Perm& a) { return a.descents(); }

bool left_weighted(const Perm& a, const Perm& b) {
    std::vector<int> s = starting_set(b), f = finishing_set(a);
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
}

CanonicalBraid to_canonical(const BraidWord& w) {
    int r = w.strands();
    Perm delta = Perm::reversal(r);
    int inf = 0;
    std::vector<Perm> factors;
    factors.reserve(w.size());

    for (const Letter& l : w.letters()) {
        if (l.sign > 0) {
            factors.push_back(Perm::transposition(r, l.index));
        } else {
            --inf;
            for (Perm& f : factors) f = flip(f);
            factors.push_back(delta * Perm::transposition(r, l.index));
        }
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = factors.size(); j > 1; --j)
            if (slide_pair(factors[j - 2], factors[j - 1])) changed = true;
        for (std::size_t j = 0; j < factors.size();) {
            if (factors[j].is_identity()) {
                factors.erase(factors.begin() + j);
                changed = true;
            } else if (factors[j].is_reversal()) {
                for (std::size_t i = 0; i < j; ++i) factors[i] = flip(factors[i]);
                factors.erase(factors.begin() + j);
                ++inf;
                changed = true;
            } else {
                ++j;
            }
        }
    }
    return CanonicalBraid{r, inf, std::move(factors)};
}

BraidWord perm_braid_word(const Perm& p) {
    // Peel letters off the front: the smallest starting-set element first.
    BraidWord w(p.n() < 2 ? 2 : p.n());
    if (p.n() < 2) {
        if (!p.is_identity()) throw std::invalid_argument("bad permutation");
        return w;
    }
    Perm rest = p;
    Perm inv = p.inverse();
    while (!rest.is_identity()) {
        int i = 0;
        for (int c = 1; c < rest.n(); ++c)
            if (is_descent(inv, c)) { i = c; break; }
        if (i == 0) throw std::logic_error("non-identity permutation with no descent");
        w.push(i, 1);
        Perm s = Perm::transposition(rest.n(), i);
        rest = s * rest;
        inv = rest.inverse();
    }
    return w;
}

BraidWord canonical_to_word(const CanonicalBraid& cb) {
    BraidWord out(cb.strands);
    BraidWord dw = half_twist_word(cb.strands);
    if (cb.inf >= 0)
        for (int i = 0; i < cb.inf; ++i) out = concat(out, dw);
    else
        for (int i = 0; i < -cb.inf; ++i) out = concat(out, inverse(dw));
    for (const Perm& f : cb.factors) out = concat(out, perm_braid_word(f));
    return out;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("strand count mismatch");
    return to_canonical(a) == to_canonical(b);
}

}  // namespace petalkit::braid
