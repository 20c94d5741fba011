#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace oracles {

using cyclo::BigInt;
using cyclo::IntPoly;
using cyclo::u64;

// mu over the divisor lattice, by trial division only.
inline int mobius_td(u64 n) {
    int sign = 1;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

// Phi_n via the Moebius product over all divisors of n (no radical
// reduction): ratio of the (x^{n/d} - 1) products split by mu(d) sign.
inline IntPoly phi_moebius(u64 n) {
    IntPoly num = IntPoly::one();
    IntPoly den = IntPoly::one();
    for (u64 d : cyclo::divisors(n)) {
        const int mu = mobius_td(d);
        if (mu == 0) continue;
        const IntPoly bin = IntPoly::x_pow_minus_one(n / d);
        if (mu == 1)
            num = mul(num, bin);
        else
            den = mul(den, bin);
    }
    return IntPoly::exact_div(num, den);
}

// Balanced product of a list of polynomials (smallest degrees first).
inline IntPoly product_tree(std::vector<IntPoly> polys) {
    if (polys.empty()) return IntPoly::one();
    auto cmp = [](const IntPoly& a, const IntPoly& b) { return a.degree() > b.degree(); };
    std::priority_queue<IntPoly, std::vector<IntPoly>, decltype(cmp)> q(cmp, std::move(polys));
    while (q.size() > 1) {
        IntPoly a = q.top();
        q.pop();
        IntPoly b = q.top();
        q.pop();
        q.push(mul(a, b));
    }
    return q.top();
}

struct NaiveBn {
    BigInt value;
    u64 witness_mask = 0; // ascending-divisor bit order, smallest nonempty maximizer
};

// B(n) by recomputing every subset product from scratch.
inline NaiveBn naive_height_B(u64 n, const std::vector<IntPoly>& phis) {
    const u64 total = u64{1} << phis.size();
    NaiveBn best;
    best.value = 0;
    for (u64 mask = 1; mask < total; ++mask) {
        IntPoly prod = IntPoly::one();
        for (std::size_t i = 0; i < phis.size(); ++i)
            if (mask & (u64{1} << i)) prod = mul(prod, phis[i]);
        const BigInt h = prod.height();
        if (h > best.value) {
            best.value = h;
            best.witness_mask = mask;
        }
    }
    (void)n;
    return best;
}

// Schoolbook multiplication with no splitting at all, for checking the
// Karatsuba path.
inline IntPoly mul_schoolbook(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly::zero();
    std::vector<BigInt> out(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) out[i + j] += f[i] * g[j];
    return IntPoly::from_coeffs(std::move(out));
}

inline IntPoly random_poly(std::mt19937_64& rng, long max_degree, long coeff_bound,
                           bool nonzero = false) {
    std::uniform_int_distribution<long> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    for (;;) {
        std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        IntPoly p = IntPoly::from_coeffs(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

} // namespace oracles
