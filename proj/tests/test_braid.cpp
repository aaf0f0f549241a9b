#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "petalkit/braid.hpp"
#include "petalkit/invariants.hpp"

using namespace petalkit::braid;
using petalkit::invariants::LaurentPoly;

namespace {

BraidWord word(int strands, std::initializer_list<int> signed_indices) {
    BraidWord w(strands);
    for (int v : signed_indices) w.push(v > 0 ? v : -v, v > 0 ? 1 : -1);
    return w;
}

BraidWord random_word(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> idx(1, strands - 1), sgn(0, 1);
    BraidWord w(strands);
    for (int i = 0; i < length; ++i) w.push(idx(rng), sgn(rng) ? 1 : -1);
    return w;
}

// Rewrite a word by a defining relation of the braid group, in place.
// Kinds: cancelling pair insertion, far commutation, braid relation.
BraidWord random_rewrite(std::mt19937& rng, const BraidWord& w) {
    std::vector<Letter> ls = w.letters();
    int r = w.strands();
    std::uniform_int_distribution<int> kind(0, 2);
    for (int attempt = 0; attempt < 20; ++attempt) {
        switch (kind(rng)) {
        case 0: {  // insert sigma_i sigma_i^-1 anywhere
            std::uniform_int_distribution<int> pos(0, static_cast<int>(ls.size()));
            std::uniform_int_distribution<int> idx(1, r - 1), sgn(0, 1);
            int p = pos(rng), i = idx(rng), s = sgn(rng) ? 1 : -1;
            ls.insert(ls.begin() + p, {Letter{i, s}, Letter{i, -s}});
            return BraidWord(r, ls);
        }
        case 1: {  // commute an adjacent far pair if one exists
            std::vector<int> spots;
            for (std::size_t k = 0; k + 1 < ls.size(); ++k)
                if (std::abs(ls[k].index - ls[k + 1].index) >= 2)
                    spots.push_back(static_cast<int>(k));
            if (spots.empty()) break;
            std::uniform_int_distribution<int> pick(0, static_cast<int>(spots.size()) - 1);
            int k = spots[pick(rng)];
            std::swap(ls[k], ls[k + 1]);
            return BraidWord(r, ls);
        }
        default: {  // rewrite one positive braid-relation triple
            std::vector<int> spots;
            for (std::size_t k = 0; k + 2 < ls.size(); ++k) {
                bool pos = ls[k].sign == 1 && ls[k + 1].sign == 1 && ls[k + 2].sign == 1;
                bool aba = ls[k].index == ls[k + 2].index &&
                           std::abs(ls[k].index - ls[k + 1].index) == 1;
                if (pos && aba) spots.push_back(static_cast<int>(k));
            }
            if (spots.empty()) break;
            std::uniform_int_distribution<int> pick(0, static_cast<int>(spots.size()) - 1);
            int k = spots[pick(rng)];
            std::swap(ls[k].index, ls[k + 1].index);
            ls[k + 2].index = ls[k].index;
            return BraidWord(r, ls);
        }
        }
    }
    return BraidWord(r, ls);  // no rewrite found; unchanged word is still equal
}

}  // namespace

TEST_CASE("word construction and validation") {
    CHECK_THROWS_AS(BraidWord(1), std::invalid_argument);
    CHECK_THROWS_AS(word(3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {{1, 2}}), std::invalid_argument);
    CHECK(tau_word(3) == word(3, {1, 2}));
    CHECK(half_twist_word(3) == word(3, {1, 2, 1}));
    CHECK(half_twist_word(4) == word(4, {1, 2, 1, 3, 2, 1}));
}

TEST_CASE("word algebra") {
    BraidWord w = word(4, {1, -2, 3});
    CHECK(inverse(w) == word(4, {-3, 2, -1}));
    CHECK(concat(w, inverse(w)).size() == 6);
    CHECK(free_reduce(concat(w, inverse(w))).size() == 0);
    CHECK(power(word(3, {1}), 3) == word(3, {1, 1, 1}));
    CHECK(power(w, 0).size() == 0);
    CHECK(power(w, -1) == inverse(w));
    CHECK(conjugate(w, word(4, {2})) == word(4, {-2, 1, -2, 3, 2}));
}

TEST_CASE("underlying permutation and knot closure test") {
    // tau_r maps to the r-cycle (1 2 ... r)
    Perm p = underlying_permutation(tau_word(5));
    CHECK(p.image() == std::vector<int>{2, 3, 4, 5, 1});
    CHECK(underlying_permutation(half_twist_word(5)).is_reversal());
    CHECK(is_knot_closure(word(2, {1, 1, 1})));
    CHECK_FALSE(is_knot_closure(word(3, {1})));
    CHECK(is_knot_closure(concat(power(half_twist_word(3), 2), power(tau_word(3), 2))));
}

TEST_CASE("tau shift relation") {
    // sigma_2 tau -> tau sigma_1 in B_3
    BraidWord w = word(3, {2, 1, 2});
    BraidWord shifted = tau_shift(w, 0);
    CHECK(shifted == word(3, {1, 2, 1}));
    CHECK(braids_equal(w, shifted));
    // also with a negative designated letter
    BraidWord v = word(3, {-2, 1, 2});
    CHECK(tau_shift(v, 0) == word(3, {1, 2, -1}));
    CHECK(braids_equal(v, tau_shift(v, 0)));
    CHECK_THROWS_AS(tau_shift(word(3, {1, 1, 2}), 0), std::invalid_argument);  // index 1
    CHECK_THROWS_AS(tau_shift(word(3, {2, 2, 1}), 0), std::invalid_argument);  // no tau after
}

TEST_CASE("normal form anchors") {
    // Delta itself: inf 1, no factors
    CanonicalBraid d = to_canonical(half_twist_word(4));
    CHECK(d.inf == 1);
    CHECK(d.factors.empty());
    // a single negative generator in B_2 is Delta^-1
    CanonicalBraid neg = to_canonical(word(2, {-1}));
    CHECK(neg.inf == -1);
    CHECK(neg.factors.empty());
    // sigma_1^-1 in B_3: inf -1, one factor
    CanonicalBraid neg3 = to_canonical(word(3, {-1}));
    CHECK(neg3.inf == -1);
    CHECK(neg3.factors.size() == 1);
    // trivial word
    CanonicalBraid id = to_canonical(BraidWord(5));
    CHECK(id.inf == 0);
    CHECK(id.factors.empty());
}

TEST_CASE("normal form factors are left-weighted permutation braids") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord w = random_word(rng, 2 + iter % 4 + 1, 24);
        CanonicalBraid cb = to_canonical(w);
        for (const Perm& f : cb.factors) {
            CHECK_FALSE(f.is_identity());
            CHECK_FALSE(f.is_reversal());
        }
        for (std::size_t k = 0; k + 1 < cb.factors.size(); ++k)
            CHECK(left_weighted(cb.factors[k], cb.factors[k + 1]));
        // round trip through a word
        CHECK(to_canonical(canonical_to_word(cb)) == cb);
    }
}

TEST_CASE("defining relations hold under braids_equal") {
    CHECK(braids_equal(word(3, {1, 2, 1}), word(3, {2, 1, 2})));
    CHECK(braids_equal(word(4, {1, 3}), word(4, {3, 1})));
    CHECK_FALSE(braids_equal(word(3, {1, 2}), word(3, {2, 1})));
    CHECK_FALSE(braids_equal(word(3, {1}), word(3, {-1})));
    CHECK(braids_equal(word(3, {1, -1}), BraidWord(3)));
}

TEST_CASE("normal form is sound under 500 random relation rewrites") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 500; ++iter) {
        int strands = 3 + iter % 4;
        BraidWord w = random_word(rng, strands, 18);
        BraidWord v = random_rewrite(rng, w);
        CHECK(braids_equal(w, v));
        // control: explicitly different elements stay different
        BraidWord extra = v;
        extra.push(1, 1);
        CHECK_FALSE(braids_equal(w, extra));
    }
}

TEST_CASE("full twist is central") {
    std::mt19937 rng(55);
    for (int r : {3, 4, 5}) {
        BraidWord full = power(half_twist_word(r), 2);
        for (int iter = 0; iter < 10; ++iter) {
            BraidWord w = random_word(rng, r, 12);
            CHECK(braids_equal(concat(full, w), concat(w, full)));
        }
    }
}

TEST_CASE("full twist identity") {
    for (int r : {3, 5}) {
        BraidWord lhs = concat(power(half_twist_word(r), 2), power(tau_word(r), 2));
        BraidWord rhs = power(tau_word(r), r + 2);
        CHECK(braids_equal(lhs, rhs));
    }
}

TEST_CASE("conjugator words and the lemma") {
    CHECK(conjugator_c(2, 1) == word(5, {2, 4}));
    CHECK(conjugator_c(2, 2) == word(5, {3}));
    CHECK(verify_lemma(1));
    CHECK(verify_lemma(2));
    CHECK(verify_lemma(3));
    auto checks = verify_lemma_checks(2);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].name == "beta_1_closed_form");
    CHECK(checks[2].name == "beta_n_positive_form");
    for (const auto& c : checks) CHECK(c.pass);
    CHECK_THROWS_AS(verify_lemma(0), std::invalid_argument);
}

TEST_CASE("reduced Burau is a homomorphism") {
    using petalkit::invariants::identity_matrix;
    using petalkit::invariants::mat_equal;
    using petalkit::invariants::mat_mul;
    std::mt19937 rng(808);
    for (int iter = 0; iter < 25; ++iter) {
        int r = 3 + iter % 3;
        BraidWord a = random_word(rng, r, 8), b = random_word(rng, r, 8);
        CHECK(mat_equal(burau_reduced(concat(a, b)),
                        mat_mul(burau_reduced(a), burau_reduced(b))));
        CHECK(mat_equal(burau_reduced(concat(a, inverse(a))), identity_matrix(r - 1)));
    }
    // Burau respects the braid relation
    CHECK(mat_equal(burau_reduced(word(3, {1, 2, 1})), burau_reduced(word(3, {2, 1, 2}))));
}

TEST_CASE("alexander polynomial from braid closures") {
    using petalkit::invariants::torus_alexander;
    // unknot: closure of sigma_1 in B_2
    CHECK(alexander_from_braid(word(2, {1})) == LaurentPoly(1));
    // trefoil
    CHECK(alexander_from_braid(word(2, {1, 1, 1})) == torus_alexander(2, 3));
    // T(3,5) as Delta^2 tau^2
    BraidWord w = concat(power(half_twist_word(3), 2), power(tau_word(3), 2));
    CHECK(alexander_from_braid(w) == torus_alexander(3, 5));
    // mirror trefoil has the same (palindromic) polynomial
    CHECK(alexander_from_braid(word(2, {-1, -1, -1})) == torus_alexander(2, 3));
    CHECK_THROWS_AS(alexander_from_braid(word(3, {1})), std::invalid_argument);
}

TEST_CASE("closure PD codes") {
    using petalkit::grid::writhe;
    petalkit::grid::PDCode pd = closure_pd(word(2, {1, 1, 1}));
    CHECK(pd.crossings.size() == 3);
    CHECK(writhe(pd) == 3);
    CHECK(writhe(closure_pd(word(2, {-1, -1, -1}))) == -3);
    // closure invariants agree with the Burau route
    using petalkit::invariants::alexander_from_pd;
    using petalkit::invariants::normalize_alexander;
    std::mt19937 rng(99);
    int done = 0;
    while (done < 15) {
        // even length: an odd word in B_3 is an odd permutation and can
        // never close up to a knot
        BraidWord w = random_word(rng, 3, 10);
        if (!is_knot_closure(w)) continue;
        ++done;
        CHECK(normalize_alexander(alexander_from_pd(closure_pd(w))) == alexander_from_braid(w));
    }
    CHECK_THROWS_AS(closure_pd(word(3, {1})), std::invalid_argument);
}
