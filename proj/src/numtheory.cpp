#include "cyclo/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

namespace {

void require_positive(u64 n, const char* who) {
    if (n == 0) throw DomainError(std::string(who) + ": n must be >= 1");
}

} // namespace

Factorization::Factorization(u64 n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
    u64 prod = 1;
    u64 prev = 0;
    for (const auto& [p, e] : factors_) {
        if (e < 1) throw ContractError("Factorization: exponent < 1");
        if (prev != 0 && p >= prev) throw ContractError("Factorization: primes not strictly decreasing");
        prev = p;
        for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    if (prod != n_) throw ContractError("Factorization: product mismatch");
}

Factorization Factorization::of(u64 n) {
    require_positive(n, "factorize");
    std::vector<PrimePower> fs; // collected ascending, reversed at the end
    u64 m = n;
    auto strip = [&](u64 p) {
        if (m % p != 0) return;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        fs.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k+-1 wheel
    for (u64 c = 5; c <= m / c; c += 6) {
        strip(c);
        strip(c + 2);
    }
    if (m > 1) fs.push_back({m, 1});
    std::reverse(fs.begin(), fs.end());
    return Factorization(n, std::move(fs));
}

u64 Factorization::tau() const {
    u64 t = 1;
    for (const auto& f : factors_) t *= f.e + 1;
    return t;
}

u64 Factorization::totient() const {
    u64 t = 1;
    for (const auto& [p, e] : factors_) {
        t *= p - 1;
        for (unsigned i = 1; i < e; ++i) t *= p;
    }
    return t;
}

int Factorization::mobius() const {
    for (const auto& f : factors_)
        if (f.e > 1) return 0;
    return factors_.size() % 2 == 0 ? 1 : -1;
}

u64 Factorization::radical() const {
    u64 r = 1;
    for (const auto& f : factors_) r *= f.p;
    return r;
}

u64 Factorization::p_k(unsigned k) const {
    if (k == 0) throw DomainError("p_k: k must be >= 1");
    return k <= factors_.size() ? factors_[k - 1].p : 1;
}

std::vector<u64> Factorization::divisors() const {
    std::vector<u64> ds{1};
    for (const auto& [p, e] : factors_) {
        const std::size_t base = ds.size();
        u64 pe = 1;
        for (unsigned i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Factorization factorize(u64 n) { return Factorization::of(n); }

u64 tau(u64 n) { return Factorization::of(n).tau(); }
unsigned omega(u64 n) { return Factorization::of(n).omega(); }
u64 totient(u64 n) { return Factorization::of(n).totient(); }
int mobius(u64 n) { return Factorization::of(n).mobius(); }
u64 radical(u64 n) { return Factorization::of(n).radical(); }
u64 p_k(u64 n, unsigned k) { return Factorization::of(n).p_k(k); }
std::vector<u64> divisors(u64 n) { return Factorization::of(n).divisors(); }

SpfSieve::SpfSieve(u64 limit, u64 memory_cap_bytes) : limit_(limit) {
    if (limit < 2) throw DomainError("SpfSieve: limit must be >= 2");
    if (limit > 0xFFFFFFFEull) throw ResourceError("SpfSieve: limit exceeds 32-bit table range");
    const u64 bytes = (limit + 1) * sizeof(std::uint32_t);
    if (bytes > memory_cap_bytes)
        throw ResourceError("SpfSieve: table of " + std::to_string(bytes) +
                            " bytes exceeds memory cap of " + std::to_string(memory_cap_bytes));
    spf_.assign(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (u64 j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

u64 SpfSieve::spf(u64 n) const {
    if (n < 2 || n > limit_) throw DomainError("SpfSieve::spf: n out of range");
    return spf_[n];
}

Factorization SpfSieve::factorize(u64 n) const {
    if (n == 0) throw DomainError("SpfSieve::factorize: n must be >= 1");
    if (n > limit_) throw DomainError("SpfSieve::factorize: n above sieve limit");
    std::vector<PrimePower> fs;
    u64 m = n;
    while (m > 1) {
        const u64 p = spf_[m];
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        fs.push_back({p, e}); // spf peeling yields primes ascending
    }
    std::reverse(fs.begin(), fs.end());
    return Factorization(n, std::move(fs));
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

} // namespace cyclo
