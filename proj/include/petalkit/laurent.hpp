#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace petalkit::invariants {

// Exact Laurent polynomial with integer coefficients in one variable.
// Stored sparsely as exponent -> coefficient; zero coefficients are never kept.
// All arithmetic is overflow-checked and throws std::overflow_error on wrap.
class LaurentPoly {
public:
    LaurentPoly() = default;                 // the zero polynomial
    LaurentPoly(long long constant);         // implicit: constants embed into the ring
    static LaurentPoly term(long long coeff, int exp);
    static LaurentPoly var();                // t

    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;                     // throws on zero polynomial
    int max_exp() const;                     // throws on zero polynomial
    long long coeff(int exp) const;
    const std::map<int, long long>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly shifted(int k) const;        // multiply by t^k
    LaurentPoly mirrored() const;            // substitute t -> t^-1
    LaurentPoly scaled_exponents(int m) const;  // substitute t -> t^m, m != 0

    // Evaluate at an integer point. Negative exponents are only meaningful
    // at x = 1 or x = -1; other points throw std::invalid_argument.
    long long eval_at_integer(long long x) const;

    std::string str(const std::string& var = "t") const;

private:
    void set(int exp, long long c);
    std::map<int, long long> terms_;
};

// Quotient a / b; throws std::domain_error unless b divides a exactly.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Multiply by +-t^k so the lowest exponent is 0 and the constant term is
// positive. Idempotent. Throws std::invalid_argument on the zero polynomial.
LaurentPoly normalize_alexander(const LaurentPoly& p);

// True when the normalized coefficient list reads the same reversed.
bool is_palindromic(const LaurentPoly& p);

// Checked integer helpers shared across the library.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace petalkit::invariants
