#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

struct CycloCacheOptions {
    // Phi_m polynomials are retained only for m up to this bound; heights are
    // always retained. Keeps the poly map's footprint predictable: storing
    // every Phi_m below N costs on the order of sum phi(m) ~ 0.3*N^2
    // coefficients.
    u64 poly_retention_limit = 4096;
};

// Shared store of cyclotomic polynomials and their heights, keyed by
// squarefree m only (A(n) = A(rad n), Phi_n = Phi_rad(n)(x^{n/rad n})).
// Readers take a shared lock; insertion is exclusive. Two threads may race to
// compute the same Phi_m; both results are identical and the last write wins.
class CycloCache {
public:
    explicit CycloCache(CycloCacheOptions opts = {}) : opts_(opts) {}

    // Phi_m for squarefree m >= 1; computes and caches on miss.
    std::shared_ptr<const IntPoly> phi_squarefree(u64 m);

    bool lookup_height(u64 m, BigInt& out) const;
    void store_height(u64 m, BigInt a);
    void store_heights(std::vector<std::pair<u64, BigInt>>&& batch);

    std::size_t cached_polys() const;
    std::size_t cached_heights() const;
    const CycloCacheOptions& options() const { return opts_; }

private:
    using Overlay = std::unordered_map<u64, std::shared_ptr<const IntPoly>>;
    std::shared_ptr<const IntPoly> phi_rec(u64 m, Overlay& overlay);
    std::shared_ptr<const IntPoly> lookup_poly(u64 m) const;

    CycloCacheOptions opts_;
    mutable std::shared_mutex mu_;
    std::unordered_map<u64, std::shared_ptr<const IntPoly>> poly_;
    std::unordered_map<u64, BigInt> height_;
};

// Phi_n, computed as Phi_rad(n) inflated by n/rad(n).
IntPoly cyclotomic(u64 n, CycloCache& cache);

// A(n) = H(Phi_n), via A(rad n); memoized in the cache.
BigInt height_A(u64 n, CycloCache& cache);

struct A0Result {
    BigInt value;
    u64 witness; // smallest divisor d | n with A(d) = A0(n)
};

// A0(n) = max over d | n of A(d), with witness.
A0Result height_A0(u64 n, CycloCache& cache);

} // namespace cyclo
