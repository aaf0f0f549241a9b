#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "petalkit/matrix.hpp"

namespace petalkit::invariants {

LaurentMatrix identity_matrix(int n) {
    LaurentMatrix m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
    return m;
}

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    LaurentMatrix r(n, std::vector<LaurentPoly>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            LaurentPoly s;
            for (int l = 0; l < k; ++l) s += a[i][l] * b[l][j];
            r[i][j] = s;
        }
    return r;
}

bool mat_equal(const LaurentMatrix& a, const LaurentMatrix& b) { return a == b; }

LaurentPoly det_cofactor(const LaurentMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m[0][0];
    LaurentPoly total;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        LaurentMatrix minor(n - 1, std::vector<LaurentPoly>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) minor[r - 1][cc++] = m[r][c];
        }
        LaurentPoly term = m[0][j] * det_cofactor(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// Bareiss fraction-free elimination: every division is exact in the ring.
LaurentPoly det_bareiss(const LaurentMatrix& input) {
    int n = static_cast<int>(input.size());
    if (n == 0) return LaurentPoly(1);
    // Clear negative exponents row by row so entries are ordinary polynomials.
    LaurentMatrix m = input;
    int total_shift = 0;
    for (int i = 0; i < n; ++i) {
        int lo = 0;
        for (const auto& e : m[i])
            if (!e.is_zero()) lo = std::min(lo, e.min_exp());
        if (lo < 0) {
            for (auto& e : m[i]) e = e.shifted(-lo);
            total_shift += lo;
        }
    }
    int sign = 1;
    LaurentPoly prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { pivot = i; break; }
            if (pivot < 0) return LaurentPoly();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    LaurentPoly d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d.shifted(total_shift);
}

namespace {

// Verified primes just under 2^62; products of prefixes serve as CRT moduli.
constexpr std::uint64_t kPrimes[] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL,
};
constexpr int kMaxPrimes = 8;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t det_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    int n = static_cast<int>(m.size());
    std::uint64_t det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = mulmod(det, m[k][k], p);
        std::uint64_t inv = invmod(m[k][k], p);
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            std::uint64_t f = mulmod(m[i][k], inv, p);
            for (int j = k; j < n; ++j) {
                std::uint64_t s = mulmod(f, m[k][j], p);
                m[i][j] = m[i][j] >= s ? m[i][j] - s : m[i][j] + p - s;
            }
        }
    }
    return det;
}

// Newton interpolation at the points 0..d (values given in that order).
std::vector<std::uint64_t> interpolate_mod_p(const std::vector<std::uint64_t>& values,
                                             std::uint64_t p) {
    int d = static_cast<int>(values.size()) - 1;
    std::vector<std::uint64_t> dd = values;  // divided differences, built in place
    for (int level = 1; level <= d; ++level) {
        std::uint64_t inv = invmod(level, p);
        for (int i = d; i >= level; --i) {
            std::uint64_t diff = dd[i] >= dd[i - 1] ? dd[i] - dd[i - 1]
                                                    : dd[i] + p - dd[i - 1];
            dd[i] = mulmod(diff, inv, p);  // nodes are consecutive integers
        }
    }
    // Expand the Newton form sum dd[k] * x(x-1)...(x-k+1) into coefficients.
    std::vector<std::uint64_t> coeffs(d + 1, 0), basis(d + 1, 0);
    basis[0] = 1;
    int blen = 1;
    for (int k = 0; k <= d; ++k) {
        for (int j = 0; j < blen; ++j)
            coeffs[j] = (coeffs[j] + mulmod(dd[k], basis[j], p)) % p;
        if (k == d) break;
        // basis *= (x - k)
        std::vector<std::uint64_t> next(d + 1, 0);
        for (int j = 0; j < blen; ++j) {
            next[j + 1] = (next[j + 1] + basis[j]) % p;
            std::uint64_t scaled = mulmod(basis[j], k % p, p);
            next[j] = (next[j] + p - scaled) % p;
        }
        basis = std::move(next);
        ++blen;
    }
    return coeffs;
}

}  // namespace

LaurentPoly det_modular(const LaurentMatrix& input) {
    int n = static_cast<int>(input.size());
    if (n == 0) return LaurentPoly(1);

    // Clear negative exponents row by row (multiplies det by t^shift, undone
    // at the end), then bound the degree and the coefficients.
    LaurentMatrix m = input;
    int total_shift = 0;
    long long degree = 0;
    double log2_coeff_bound = 0.0;
    for (int i = 0; i < n; ++i) {
        int lo = 0, hi = 0;
        long long l1 = 0;
        for (const auto& e : m[i])
            if (!e.is_zero()) {
                lo = std::min(lo, e.min_exp());
            }
        if (lo < 0) {
            for (auto& e : m[i]) e = e.shifted(-lo);
            total_shift += lo;
        }
        for (const auto& e : m[i])
            if (!e.is_zero()) {
                hi = std::max(hi, e.max_exp());
                for (const auto& [exp, c] : e.terms()) l1 += c < 0 ? -c : c;
            }
        if (l1 == 0) return LaurentPoly();  // zero row
        degree += hi;
        log2_coeff_bound += std::log2(static_cast<double>(l1));
    }
    if (degree > 100000) throw std::invalid_argument("determinant degree bound too large");

    int primes_needed = static_cast<int>(log2_coeff_bound / 61.0) + 1 + 1;  // headroom bit
    if (primes_needed > kMaxPrimes)
        throw std::invalid_argument("matrix exceeds the modular determinant's lift capacity");

    int d = static_cast<int>(degree);
    // values[pi][x] = det(M(x)) mod p_pi for x = 0..d
    std::vector<std::vector<std::uint64_t>> coeffs_mod(primes_needed);
    for (int pi = 0; pi < primes_needed; ++pi) {
        std::uint64_t p = kPrimes[pi];
        std::vector<std::uint64_t> values(d + 1);
        std::vector<std::vector<std::uint64_t>> mint(n, std::vector<std::uint64_t>(n));
        for (int x = 0; x <= d; ++x) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::uint64_t acc = 0, xp = 1;
                    int at = 0;
                    if (m[i][j].is_zero()) { mint[i][j] = 0; continue; }
                    for (const auto& [exp, c] : m[i][j].terms()) {
                        while (at < exp) { xp = mulmod(xp, x, p); ++at; }
                        std::uint64_t cm =
                            static_cast<std::uint64_t>((c % static_cast<long long>(p) +
                                                        static_cast<long long>(p)) %
                                                       static_cast<long long>(p));
                        acc = (acc + mulmod(cm, xp, p)) % p;
                    }
                    mint[i][j] = acc;
                }
            values[x] = det_mod_p(mint, p);
        }
        coeffs_mod[pi] = interpolate_mod_p(values, p);
    }

    // CRT lift each coefficient with GMP, symmetric range.
    mpz_t modulus, half, acc, tmp, coef;
    mpz_inits(modulus, half, acc, tmp, coef, nullptr);
    mpz_set_ui(modulus, 1);
    for (int pi = 0; pi < primes_needed; ++pi) {
        mpz_set_ui(tmp, kPrimes[pi]);
        mpz_mul(modulus, modulus, tmp);
    }
    mpz_fdiv_q_2exp(half, modulus, 1);

    LaurentPoly result;
    for (int j = 0; j <= d; ++j) {
        // Incremental CRT: acc satisfies acc = coeffs_mod[pi][j] (mod p_pi).
        mpz_set_ui(acc, coeffs_mod[0][j]);
        mpz_set_ui(tmp, kPrimes[0]);
        for (int pi = 1; pi < primes_needed; ++pi) {
            std::uint64_t p = kPrimes[pi];
            std::uint64_t acc_mod = mpz_fdiv_ui(acc, p);
            std::uint64_t m_mod = mpz_fdiv_ui(tmp, p);
            std::uint64_t target = coeffs_mod[pi][j];
            std::uint64_t delta = target >= acc_mod ? target - acc_mod
                                                    : target + p - acc_mod;
            std::uint64_t t = mulmod(delta, invmod(m_mod, p), p);
            mpz_set_ui(coef, t);
            mpz_mul(coef, coef, tmp);
            mpz_add(acc, acc, coef);
            mpz_set_ui(coef, p);
            mpz_mul(tmp, tmp, coef);
        }
        // Symmetric lift.
        if (mpz_cmp(acc, half) > 0) mpz_sub(acc, acc, modulus);
        if (!mpz_fits_slong_p(acc))
            throw std::overflow_error("determinant coefficient exceeds 64 bits");
        long long c = mpz_get_si(acc);
        if (c != 0) result += LaurentPoly::term(c, j);
    }
    mpz_clears(modulus, half, acc, tmp, coef, nullptr);
    return result.shifted(total_shift);
}

LaurentPoly det_laurent(const LaurentMatrix& m) {
    return m.size() <= 20 ? det_bareiss(m) : det_modular(m);
}

}  // namespace petalkit::invariants
