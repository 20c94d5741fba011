#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclo/errors.hpp"

namespace cyclo {

using BigInt = mpz_class;

// Schoolbook below this operand length, Karatsuba at or above. Benchmarked
// default; see poly_bench notes in the repo history before changing.
inline constexpr std::size_t kKaratsubaThreshold = 64;

// Dense univariate polynomial over arbitrary-precision integers.
// Canonical form: coefficient of x^i at index i, no trailing zero
// coefficient. The zero polynomial has an empty coefficient list and,
// by convention here, degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly from_coeffs(std::vector<BigInt> coeffs); // normalizes

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly x_pow_minus_one(std::uint64_t n); // x^n - 1, n >= 1

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::span<const BigInt> coeffs() const { return c_; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }

    // max |c_i|; 0 for the zero polynomial
    BigInt height() const;

    // f(x) -> f(x^m); preserves the coefficient multiset, hence the height
    IntPoly inflate(std::uint64_t m) const;

    friend IntPoly mul(const IntPoly& f, const IntPoly& g);

    // Quotient f/g for exact integer-polynomial division. Ascending-order
    // synthetic division; any nonzero remainder (or non-integral step) throws
    // IntegrityError since callers only divide by known factors.
    static IntPoly exact_div(const IntPoly& f, const IntPoly& g);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // JSON array of decimal strings, ascending coefficient order
    std::string to_json() const;
    static IntPoly from_json(const std::string& text);

    std::string to_string() const; // human form, e.g. "x^2 - x + 1"

private:
    void normalize();
    std::vector<BigInt> c_;
};

IntPoly mul(const IntPoly& f, const IntPoly& g);

// In-place kernels used by the subset enumerator so a running product can be
// updated without reallocating its coefficient buffer. `len` tracks the live
// prefix of `buf` (coefficients 0..len-1); entries at len.. are zero.
namespace polybuf {

// buf *= g (descending in-place schoolbook). g nonzero, canonical.
void mul_in_place(std::vector<BigInt>& buf, std::size_t& len, std::span<const BigInt> g);

// buf /= g, exact (ascending synthetic division). Throws IntegrityError when
// the division is not exact. g nonzero, canonical, g[0] != 0.
void div_in_place(std::vector<BigInt>& buf, std::size_t& len, std::span<const BigInt> g);

// max |buf[i]|, i < len
const BigInt* max_abs(const std::vector<BigInt>& buf, std::size_t len, BigInt& scratch);

} // namespace polybuf

} // namespace cyclo
