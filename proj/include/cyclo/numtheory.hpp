#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

using u64 = std::uint64_t;

struct PrimePower {
    u64 p;
    unsigned e;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition with primes in strictly DECREASING order, so that
// factors()[k-1].p is p_k(n), the k-th largest distinct prime factor.
class Factorization {
public:
    static Factorization of(u64 n); // trial division; rejects n = 0

    // Construct from an already-decomposed list (primes strictly decreasing).
    Factorization(u64 n, std::vector<PrimePower> factors);

    u64 n() const { return n_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    unsigned omega() const { return static_cast<unsigned>(factors_.size()); }
    u64 tau() const;
    u64 totient() const;
    int mobius() const;   // 0 iff some exponent > 1
    u64 radical() const;
    u64 p_k(unsigned k) const; // k >= 1; returns 1 when k > omega
    std::vector<u64> divisors() const; // ascending, tau() entries

private:
    u64 n_ = 1;
    std::vector<PrimePower> factors_;
};

Factorization factorize(u64 n);

u64 tau(u64 n);
unsigned omega(u64 n);
u64 totient(u64 n);
int mobius(u64 n);
u64 radical(u64 n);
u64 p_k(u64 n, unsigned k);
std::vector<u64> divisors(u64 n);

// Smallest-prime-factor table for 2 <= n <= limit. Built once, read-only
// afterwards; safe to share across threads.
class SpfSieve {
public:
    static constexpr u64 kDefaultMemoryCapBytes = 512ull << 20;

    explicit SpfSieve(u64 limit, u64 memory_cap_bytes = kDefaultMemoryCapBytes);

    u64 limit() const { return limit_; }
    u64 spf(u64 n) const; // n in [2, limit]
    Factorization factorize(u64 n) const;

    bool is_prime(u64 n) const { return n >= 2 && spf(n) == n; }

private:
    u64 limit_;
    std::vector<std::uint32_t> spf_;
};

// Primes up to limit, ascending.
std::vector<u64> primes_up_to(u64 limit);

} // namespace cyclo
