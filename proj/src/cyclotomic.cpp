#include "cyclo/cyclotomic.hpp"

#include <algorithm>

namespace cyclo {

std::shared_ptr<const IntPoly> CycloCache::lookup_poly(u64 m) const {
    std::shared_lock lk(mu_);
    auto it = poly_.find(m);
    return it == poly_.end() ? nullptr : it->second;
}

bool CycloCache::lookup_height(u64 m, BigInt& out) const {
    std::shared_lock lk(mu_);
    auto it = height_.find(m);
    if (it == height_.end()) return false;
    out = it->second;
    return true;
}

void CycloCache::store_height(u64 m, BigInt a) {
    std::unique_lock lk(mu_);
    height_[m] = std::move(a);
}

void CycloCache::store_heights(std::vector<std::pair<u64, BigInt>>&& batch) {
    std::unique_lock lk(mu_);
    for (auto& [m, a] : batch) height_[m] = std::move(a);
}

std::size_t CycloCache::cached_polys() const {
    std::shared_lock lk(mu_);
    return poly_.size();
}

std::size_t CycloCache::cached_heights() const {
    std::shared_lock lk(mu_);
    return height_.size();
}

std::shared_ptr<const IntPoly> CycloCache::phi_squarefree(u64 m) {
    if (m == 0) throw DomainError("phi_squarefree: m must be >= 1");
    Overlay overlay;
    return phi_rec(m, overlay);
}

// Phi_m for squarefree m: start from x^m - 1 and exact-divide by Phi_d for
// every proper divisor d, largest degree first so the dividend shrinks fast.
// Divisors of m are themselves squarefree, so an ascending warm-up pass keeps
// the recursion depth at one except when retention has dropped a needed poly.
std::shared_ptr<const IntPoly> CycloCache::phi_rec(u64 m, Overlay& overlay) {
    if (auto p = lookup_poly(m)) return p;
    if (auto it = overlay.find(m); it != overlay.end()) return it->second;

    std::shared_ptr<const IntPoly> result;
    if (m == 1) {
        result = std::make_shared<IntPoly>(IntPoly{-1, 1});
    } else {
        const Factorization f = Factorization::of(m);
        if (f.mobius() == 0) throw ContractError("phi_squarefree: m is not squarefree");
        std::vector<u64> divs = f.divisors();
        divs.pop_back(); // ascending proper divisors
        std::vector<std::shared_ptr<const IntPoly>> parts;
        parts.reserve(divs.size());
        for (u64 d : divs) parts.push_back(phi_rec(d, overlay));
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a->degree() > b->degree(); });
        IntPoly p = IntPoly::x_pow_minus_one(m);
        for (const auto& part : parts) p = IntPoly::exact_div(p, *part);
        result = std::make_shared<IntPoly>(std::move(p));
    }

    {
        std::unique_lock lk(mu_);
        height_.emplace(m, result->height());
        if (m <= opts_.poly_retention_limit) {
            poly_[m] = result;
            return result;
        }
    }
    overlay.emplace(m, result);
    return result;
}

IntPoly cyclotomic(u64 n, CycloCache& cache) {
    if (n == 0) throw DomainError("cyclotomic: n must be >= 1");
    const u64 r = radical(n);
    auto base = cache.phi_squarefree(r);
    return base->inflate(n / r);
}

BigInt height_A(u64 n, CycloCache& cache) {
    if (n == 0) throw DomainError("height_A: n must be >= 1");
    const u64 r = radical(n);
    BigInt a;
    if (cache.lookup_height(r, a)) return a;
    return cache.phi_squarefree(r)->height();
}

A0Result height_A0(u64 n, CycloCache& cache) {
    if (n == 0) throw DomainError("height_A0: n must be >= 1");
    const u64 r = radical(n);
    A0Result best{BigInt(0), 1};
    for (u64 d : divisors(r)) { // ascending, so the first max is the smallest witness
        BigInt a = height_A(d, cache);
        if (a > best.value) {
            best.value = std::move(a);
            best.witness = d;
        }
    }
    return best;
}

} // namespace cyclo
