#include "petalkit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace petalkit::invariants {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in Laurent arithmetic");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in Laurent arithmetic");
    return r;
}

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::term(long long coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

LaurentPoly LaurentPoly::var() { return term(1, 1); }

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

long long LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::set(int exp, long long c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) set(e, checked_add(coeff(e), c));
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) set(e, checked_add(coeff(e), -c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            int e = ea + eb;
            r.set(e, checked_add(r.coeff(e), checked_mul(ca, cb)));
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled_exponents(int m) const {
    if (m == 0) throw std::invalid_argument("exponent scale must be nonzero");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e * m] = c;
    return r;
}

long long LaurentPoly::eval_at_integer(long long x) const {
    if (is_zero()) return 0;
    if (min_exp() < 0 && x != 1 && x != -1)
        throw std::invalid_argument("negative exponents require evaluation at +-1");
    long long total = 0;
    for (const auto& [e, c] : terms_) {
        long long p = 1;
        int n = e < 0 ? -e : e;          // x is +-1 when e < 0, so x^e = x^n
        for (int i = 0; i < n; ++i) p = checked_mul(p, x);
        total = checked_add(total, checked_mul(c, p));
    }
    return total;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0 || a != 1) out << a;
        if (e != 0) {
            out << var;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Shift both to ordinary polynomials, long-divide from the top, then
    // shift the quotient back.
    LaurentPoly num = a.shifted(-a.min_exp());
    LaurentPoly den = b.shifted(-b.min_exp());
    int shift = a.min_exp() - b.min_exp();
    long long lead = den.coeff(den.max_exp());
    LaurentPoly q;
    while (!num.is_zero()) {
        int de = num.max_exp() - den.max_exp();
        if (de < 0) throw std::domain_error("inexact Laurent division");
        long long lc = num.coeff(num.max_exp());
        if (lc % lead != 0) throw std::domain_error("inexact Laurent division");
        LaurentPoly t = LaurentPoly::term(lc / lead, de);
        q += t;
        num -= t * den;
    }
    return q.shifted(shift);
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    LaurentPoly r = p.shifted(-p.min_exp());
    if (r.coeff(0) < 0) r = -r;
    return r;
}

bool is_palindromic(const LaurentPoly& p) {
    if (p.is_zero()) return false;
    LaurentPoly n = normalize_alexander(p);
    return n == normalize_alexander(n.mirrored());
}

}  // namespace petalkit::invariants
