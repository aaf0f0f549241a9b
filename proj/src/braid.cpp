#include "petalkit/braid.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace petalkit::braid {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 2) throw std::invalid_argument("braid group needs at least 2 strands");
    for (const Letter& l : letters_) {
        if (l.index < 1 || l.index >= strands_)
            throw std::invalid_argument("generator index out of range");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

void BraidWord::push(int index, int sign) {
    if (index < 1 || index >= strands_)
        throw std::invalid_argument("generator index out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("letter sign must be +1 or -1");
    letters_.push_back({index, sign});
}

BraidWord tau_word(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("tau is defined for odd strand count r >= 3");
    BraidWord w(r);
    for (int i = 1; i < r; ++i) w.push(i, 1);
    return w;
}

BraidWord half_twist_word(int r) {
    if (r < 2) throw std::invalid_argument("half twist needs at least 2 strands");
    BraidWord w(r);
    for (int k = 1; k < r; ++k)
        for (int i = k; i >= 1; --i) w.push(i, 1);
    return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("strand count mismatch");
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& a) {
    std::vector<Letter> letters(a.letters().rbegin(), a.letters().rend());
    for (Letter& l : letters) l.sign = -l.sign;
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
    return concat(inverse(g), concat(w, g));
}

BraidWord power(const BraidWord& w, int k) {
    BraidWord base = k < 0 ? inverse(w) : w;
    int reps = k < 0 ? -k : k;
    BraidWord out(w.strands());
    for (int i = 0; i < reps; ++i) out = concat(out, base);
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> stack;
    for (const Letter& l : w.letters()) {
        if (!stack.empty() && stack.back().index == l.index &&
            stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return BraidWord(w.strands(), std::move(stack));
}

BraidWord tau_shift(const BraidWord& w, std::size_t pos) {
    int r = w.strands();
    const auto& ls = w.letters();
    if (pos >= ls.size()) throw std::invalid_argument("position out of range");
    Letter moved = ls[pos];
    if (moved.index < 2)
        throw std::invalid_argument("relation (3) needs a generator index >= 2");
    if (ls.size() - pos - 1 < static_cast<std::size_t>(r - 1))
        throw std::invalid_argument("no tau block after the designated letter");
    for (int i = 1; i < r; ++i) {
        const Letter& l = ls[pos + i];
        if (l.index != i || l.sign != 1)
            throw std::invalid_argument("no tau block after the designated letter");
    }
    std::vector<Letter> out(ls.begin(), ls.begin() + pos);
    for (int i = 1; i < r; ++i) out.push_back({i, 1});
    out.push_back({moved.index - 1, moved.sign});
    out.insert(out.end(), ls.begin() + pos + r, ls.end());
    return BraidWord(r, std::move(out));
}

Perm underlying_permutation(const BraidWord& w) {
    // phi(l_1 ... l_m) = s_{l_1} o ... o s_{l_m}; a group homomorphism sending
    // tau_r to the r-cycle (1 2 ... r).
    Perm acc(w.strands());
    for (const Letter& l : w.letters())
        acc = acc * Perm::transposition(w.strands(), l.index);
    return acc;
}

bool is_knot_closure(const BraidWord& w) {
    return underlying_permutation(w).is_single_cycle();
}

BraidWord conjugator_c(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("k must lie in 1..n");
    BraidWord w(2 * n + 1);
    for (int i = k + 1; i <= 2 * n - k + 1; i += 2) w.push(i, 1);
    return w;
}

BraidWord beta(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("k must lie in 0..n");
    int r = 2 * n + 1;
    BraidWord b = concat(power(half_twist_word(r), 2), power(tau_word(r), 2));
    for (int j = 1; j <= k; ++j) b = conjugate(b, conjugator_c(n, j));
    return b;
}

std::vector<LemmaCheck> verify_lemma_checks(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    int r = 2 * n + 1;
    BraidWord delta2 = power(half_twist_word(r), 2);
    BraidWord tau = tau_word(r);
    std::vector<LemmaCheck> checks;

    // Intermediate closed forms: beta_k = Delta^2 tau (s_k^-1...s_1^-1) tau
    // (s_2n ... s_{2n-k+1}), for every k in 1..n.
    for (int k = 1; k <= n; ++k) {
        BraidWord expected = concat(delta2, tau);
        for (int i = k; i >= 1; --i) expected.push(i, -1);
        expected = concat(expected, tau);
        for (int i = 2 * n; i >= 2 * n - k + 1; --i) expected.push(i, 1);
        checks.push_back({"beta_" + std::to_string(k) + "_closed_form",
                          braids_equal(beta(n, k), expected)});
    }

    // Final form: beta_n = Delta^2 tau (s_{n+1}...s_{2n}) (s_2n ... s_{n+1}).
    BraidWord final_form = concat(delta2, tau);
    for (int i = n + 1; i <= 2 * n; ++i) final_form.push(i, 1);
    for (int i = 2 * n; i >= n + 1; --i) final_form.push(i, 1);
    checks.push_back({"beta_n_positive_form", braids_equal(beta(n, n), final_form)});
    return checks;
}

bool verify_lemma(int n) {
    for (const LemmaCheck& c : verify_lemma_checks(n))
        if (!c.pass) return false;
    return true;
}

grid::PDCode closure_pd(const BraidWord& w) {
    if (!is_knot_closure(w))
        throw std::invalid_argument("braid closure is not a knot");
    int r = w.strands();
    int m = static_cast<int>(w.size());
    if (m == 0) return {};

    // Provisional edge ids: 1..r seed the strand positions at the top, each
    // crossing mints two more. The closure then glues bottom ids back onto
    // the top ids, and a final walk along the knot renames everything to the
    // consecutive labels PD codes want.
    int next_id = r;
    std::vector<int> cur(r + 1);
    for (int i = 1; i <= r; ++i) cur[i] = i;

    struct ProtoCrossing {
        int a, b, c, d, sign;
    };
    std::vector<ProtoCrossing> proto;
    proto.reserve(m);
    for (const Letter& l : w.letters()) {
        int i = l.index;
        ProtoCrossing x{};
        x.sign = l.sign;
        if (l.sign > 0) {
            // Strand at position i+1 passes over toward position i.
            x.a = cur[i];
            x.d = cur[i + 1];
            x.b = ++next_id;  // over-out, lands at position i
            x.c = ++next_id;  // under-out, lands at position i+1
            cur[i] = x.b;
            cur[i + 1] = x.c;
        } else {
            // Strand at position i+1 passes under toward position i.
            x.a = cur[i + 1];
            x.b = cur[i];
            x.c = ++next_id;  // under-out, lands at position i
            x.d = ++next_id;  // over-out, lands at position i+1
            cur[i] = x.c;
            cur[i + 1] = x.d;
        }
        proto.push_back(x);
    }

    // Closure: the id leaving the bottom of position i is the id entering
    // the top of position i.
    std::vector<int> parent(next_id + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 1; i <= r; ++i) parent[find(cur[i])] = find(i);

    // head[e] = (crossing, as-under?) where edge e is consumed.
    std::vector<std::pair<int, bool>> head(next_id + 1, {-1, false});
    for (int k = 0; k < m; ++k) {
        head[find(proto[k].a)] = {k, true};
        head[find(proto[k].sign > 0 ? proto[k].d : proto[k].b)] = {k, false};
    }

    std::vector<int> label(next_id + 1, 0);
    int e = find(1);
    for (int step = 1; step <= 2 * m; ++step) {
        label[e] = step;
        auto [k, as_under] = head[e];
        const ProtoCrossing& x = proto[k];
        int out = as_under ? x.c : (x.sign > 0 ? x.b : x.d);
        e = find(out);
    }

    grid::PDCode pd;
    pd.crossings.reserve(m);
    for (const ProtoCrossing& x : proto)
        pd.crossings.push_back({label[find(x.a)], label[find(x.b)], label[find(x.c)],
                                label[find(x.d)], x.sign});
    grid::validate_pd(pd);
    return pd;
}

}  // namespace petalkit::braid
