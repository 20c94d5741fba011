#include "cyclo/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace cyclo {

BigInt pr_bound(std::span<const IntPoly> factors) {
    if (factors.empty()) throw ContractError("pr_bound: empty factor list");
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].degree() < factors[i - 1].degree())
            throw ContractError("pr_bound: factors not sorted by ascending degree");
    BigInt b = 1;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) b *= factors[i].degree() + 1;
    for (const IntPoly& f : factors) b *= f.height();
    return b;
}

namespace {

struct Candidate {
    bool valid = false;
    BigInt value;
    u64 canon_mask = 0;
};

u64 to_canonical(u64 internal_mask, const std::vector<unsigned>& ord) {
    u64 canon = 0;
    while (internal_mask != 0) {
        const int j = std::countr_zero(internal_mask);
        canon |= u64{1} << ord[static_cast<std::size_t>(j)];
        internal_mask &= internal_mask - 1;
    }
    return canon;
}

// Shared state for one height_B call.
struct Enumeration {
    std::vector<std::vector<BigInt>> factors; // coefficients, internal bit order
    std::vector<unsigned> ord;                // internal bit -> ascending-divisor index
    unsigned tau = 0;

    void consider(Candidate& best, const BigInt* h, u64 internal_mask) const {
        if (internal_mask == 0) return; // empty subset never witnesses
        const int cmp = best.valid ? mpz_cmpabs(h->get_mpz_t(), best.value.get_mpz_t()) : 1;
        if (cmp > 0) {
            best.valid = true;
            mpz_abs(best.value.get_mpz_t(), h->get_mpz_t());
            best.canon_mask = to_canonical(internal_mask, ord);
        } else if (cmp == 0) {
            const u64 canon = to_canonical(internal_mask, ord);
            if (canon < best.canon_mask) best.canon_mask = canon;
        }
    }

    // Gray-code walk over indices [lo, hi); subset at index i is gray(i).
    Candidate walk_block(u64 lo, u64 hi) const {
        std::vector<BigInt> buf;
        buf.emplace_back(1);
        std::size_t len = 1;
        u64 mask = lo ^ (lo >> 1);
        for (u64 rest = mask; rest != 0; rest &= rest - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(rest));
            polybuf::mul_in_place(buf, len, factors[j]);
        }
        Candidate best;
        BigInt scratch;
        best.valid = false;
        consider(best, polybuf::max_abs(buf, len, scratch), mask);
        for (u64 i = lo + 1; i < hi; ++i) {
            const auto j = static_cast<std::size_t>(std::countr_zero(i));
            const u64 bit = u64{1} << j;
            mask ^= bit;
            if (mask & bit)
                polybuf::mul_in_place(buf, len, factors[j]);
            else
                polybuf::div_in_place(buf, len, factors[j]);
            consider(best, polybuf::max_abs(buf, len, scratch), mask);
        }
        return best;
    }
};

// Bound for the running product P extended by any subset of the factor pool
// {0..j}: PR bound of the multiset {P} u pool, which dominates the PR bound
// of {P} u (any sub-pool) because each factor contributes (1+deg)*H >= 1.
struct PrunePools {
    std::vector<BigInt> degp1; // prefix products of (1 + deg f_i)
    std::vector<BigInt> hprod; // prefix products of H(f_i)
    std::vector<long> dmax;    // prefix max degree
};

struct DfsState {
    const Enumeration* en;
    PrunePools pools;
    std::vector<BigInt> buf;
    std::size_t len = 1;
    Candidate best;
    BigInt scratch, bound;
    u64 examined = 0, pruned = 0;

    void visit_leaf(u64 mask) {
        ++examined;
        en->consider(best, polybuf::max_abs(buf, len, scratch), mask);
    }

    void dfs(int j, u64 mask) {
        if (j < 0) {
            visit_leaf(mask);
            return;
        }
        if (best.valid) {
            const long degP = static_cast<long>(len) - 1;
            const long dm = std::max(degP, pools.dmax[static_cast<std::size_t>(j)]);
            // bound = degp1[j]*(1+degP)/(1+dm) * H(P) * hprod[j]
            bound = pools.degp1[static_cast<std::size_t>(j)];
            bound *= degP + 1;
            mpz_divexact_ui(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(dm + 1));
            bound *= *polybuf::max_abs(buf, len, scratch);
            bound *= pools.hprod[static_cast<std::size_t>(j)];
            if (mpz_cmpabs(bound.get_mpz_t(), best.value.get_mpz_t()) < 0) {
                pruned += u64{1} << (j + 1);
                return;
            }
        }
        dfs(j - 1, mask);
        polybuf::mul_in_place(buf, len, en->factors[static_cast<std::size_t>(j)]);
        dfs(j - 1, mask | (u64{1} << j));
        polybuf::div_in_place(buf, len, en->factors[static_cast<std::size_t>(j)]);
    }
};

} // namespace

BnResult height_B(u64 n, const BnOptions& opts, CycloCache& cache) {
    if (n == 0) throw DomainError("height_B: n must be >= 1");
    const std::vector<u64> divs = divisors(n);
    const auto tau = static_cast<unsigned>(divs.size());
    if (tau > opts.max_tau || tau > 62) {
        const u64 req = tau >= 63 ? ~u64{0} : u64{1} << tau;
        throw BudgetError("height_B: tau(" + std::to_string(n) + ") = " + std::to_string(tau) +
                              " exceeds max_tau = " + std::to_string(opts.max_tau) + "; would enumerate " +
                              std::to_string(req) + " subsets",
                          req);
    }

    Enumeration en;
    en.tau = tau;
    en.ord.resize(tau);
    std::iota(en.ord.begin(), en.ord.end(), 0u);
    std::vector<IntPoly> polys;
    polys.reserve(tau);
    for (u64 d : divs) polys.push_back(cyclotomic(d, cache));
    // Cheapest factors on the low bits: bit j flips 2^(tau-1-j) times in a
    // full Gray walk.
    std::stable_sort(en.ord.begin(), en.ord.end(), [&](unsigned a, unsigned b) {
        return polys[a].degree() < polys[b].degree();
    });
    en.factors.resize(tau);
    for (unsigned j = 0; j < tau; ++j) {
        const auto& src = polys[en.ord[j]].coeffs();
        en.factors[j].assign(src.begin(), src.end());
    }

    const u64 total = u64{1} << tau;
    BnResult res;
    res.n = n;
    Candidate best;

    if (opts.prune) {
        DfsState st;
        st.en = &en;
        st.pools.degp1.resize(tau);
        st.pools.hprod.resize(tau);
        st.pools.dmax.resize(tau);
        BigInt dp = 1, hp = 1;
        long dm = -1;
        for (unsigned j = 0; j < tau; ++j) {
            const IntPoly& f = polys[en.ord[j]];
            dp *= f.degree() + 1;
            hp *= f.height();
            dm = std::max(dm, f.degree());
            st.pools.degp1[j] = dp;
            st.pools.hprod[j] = hp;
            st.pools.dmax[j] = dm;
        }
        st.buf.emplace_back(1);
        st.len = 1;
        st.dfs(static_cast<int>(tau) - 1, 0);
        best = std::move(st.best);
        res.subsets_examined = st.examined;
        res.pruned = st.pruned;
    } else {
        unsigned nthreads = opts.threads <= 1 ? 1u : static_cast<unsigned>(opts.threads);
        if (total < 4096) nthreads = 1;
        nthreads = std::min<u64>(nthreads, total);
        if (nthreads <= 1) {
            best = en.walk_block(0, total);
        } else {
            std::vector<Candidate> parts(nthreads);
            std::vector<std::thread> pool;
            const u64 step = total / nthreads;
            for (unsigned t = 0; t < nthreads; ++t) {
                const u64 lo = t * step;
                const u64 hi = t + 1 == nthreads ? total : lo + step;
                pool.emplace_back([&, t, lo, hi] { parts[t] = en.walk_block(lo, hi); });
            }
            for (auto& th : pool) th.join();
            for (auto& c : parts) {
                if (!c.valid) continue;
                if (!best.valid) {
                    best = std::move(c);
                    continue;
                }
                const int cmp = mpz_cmpabs(c.value.get_mpz_t(), best.value.get_mpz_t());
                if (cmp > 0 || (cmp == 0 && c.canon_mask < best.canon_mask)) best = std::move(c);
            }
        }
        res.subsets_examined = total;
        res.pruned = 0;
    }

    res.b_value = std::move(best.value);
    res.witness_mask = best.canon_mask;
    for (unsigned i = 0; i < tau; ++i)
        if (best.canon_mask & (u64{1} << i)) res.witness.push_back(divs[i]);
    return res;
}

} // namespace cyclo
