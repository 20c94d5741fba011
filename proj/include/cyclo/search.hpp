#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

// Upper bound on H(f_1 ... f_k) for factors sorted by ascending degree:
// prod_{i=1..k-1} (1 + deg f_i) * prod_{i=1..k} H(f_i).
// Throws ContractError when the input is empty or not degree-sorted.
BigInt pr_bound(std::span<const IntPoly> factors);

struct BnResult {
    u64 n = 1;
    BigInt b_value;                // max height over all subset products
    u64 witness_mask = 0;          // bit i <-> i-th smallest divisor of n
    std::vector<u64> witness;      // divisors in the mask, ascending
    u64 subsets_examined = 0;
    u64 pruned = 0;                // subsets skipped by the bound (prune mode)
};

struct BnOptions {
    unsigned max_tau = 20;
    bool prune = false;
    int threads = 1; // Gray-code block parallelism; <=1 means sequential
};

// Exact B(n): maximum height over all 2^tau(n) products of distinct Phi_d,
// d | n (every divisor of x^n - 1 is, up to sign, such a product). The
// witness is the maximizing subset with the smallest bitmask over ascending
// divisor order, restricted to nonempty subsets (the empty product's height 1
// never exceeds every singleton's height). Throws BudgetError when
// tau(n) > max_tau.
BnResult height_B(u64 n, const BnOptions& opts, CycloCache& cache);

} // namespace cyclo
