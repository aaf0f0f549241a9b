#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "petalkit/matrix.hpp"
#include "petalkit/pdcode.hpp"
#include "petalkit/permutation.hpp"

namespace petalkit::braid {

// One Artin generator occurrence: sigma_{index}^{sign}.
struct Letter {
    int index;  // 1 <= index <= strands-1
    int sign;   // +1 or -1
    bool operator==(const Letter&) const = default;
};

// A word in the Artin generators of B_r. Letters are listed in composition
// order; concat(a, b) is "a then b".
class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<Letter> letters = {});

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    void push(int index, int sign);
    bool operator==(const BraidWord&) const = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

BraidWord tau_word(int r);        // sigma_1 sigma_2 ... sigma_{r-1}, r odd >= 3
BraidWord half_twist_word(int r); // (sigma_1)(sigma_2 sigma_1)...(sigma_{r-1}...sigma_1)

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord conjugate(const BraidWord& w, const BraidWord& g);  // g^-1 w g
BraidWord power(const BraidWord& w, int k);

BraidWord free_reduce(const BraidWord& w);

// Rewrites the designated letter occurrence at position pos (0-based) using
// the relation sigma_i^e * tau = tau * sigma_{i-1}^e, i >= 2. The letters
// immediately after pos must literally spell tau.
BraidWord tau_shift(const BraidWord& w, std::size_t pos);

Perm underlying_permutation(const BraidWord& w);
bool is_knot_closure(const BraidWord& w);

// Garside left normal form Delta^inf A_1 ... A_m with left-weighted
// permutation-braid factors, none equal to the identity or Delta.
struct CanonicalBraid {
    int strands;
    int inf;
    std::vector<Perm> factors;
    bool operator==(const CanonicalBraid&) const = default;
};

std::vector<int> starting_set(const Perm& a);   // {i : sigma_i prefixes a}
std::vector<int> finishing_set(const Perm& a);  // {i : sigma_i suffixes a}
bool left_weighted(const Perm& a, const Perm& b);

CanonicalBraid to_canonical(const BraidWord& w);
BraidWord canonical_to_word(const CanonicalBraid& cb);
BraidWord perm_braid_word(const Perm& p);  // canonical positive word for one factor
bool braids_equal(const BraidWord& a, const BraidWord& b);

// Distinguished elements of B_{2n+1} used in the torus-knot lemma.
BraidWord conjugator_c(int n, int k);  // sigma_{k+1} sigma_{k+3} ... sigma_{2n-k+1}
BraidWord beta(int n, int k);          // beta_0 = Delta^2 tau^2, beta_k = c_k^-1 beta_{k-1} c_k

// One named equality per induction step: the closed form of beta_k for
// k = 1..n, then the final product form of beta_n.
struct LemmaCheck {
    std::string name;
    bool pass;
};
std::vector<LemmaCheck> verify_lemma_checks(int n);
bool verify_lemma(int n);

// Reduced Burau representation, (r-1)x(r-1) over Laurent polynomials.
invariants::LaurentMatrix burau_reduced(const BraidWord& w);

// Alexander polynomial of the closure (which must be a knot), normalized.
invariants::LaurentPoly alexander_from_braid(const BraidWord& w);

// PD code of the closure diagram (which must be a knot with at least one
// crossing). Positive sigma_i is a positive crossing.
grid::PDCode closure_pd(const BraidWord& w);

}  // namespace petalkit::braid
