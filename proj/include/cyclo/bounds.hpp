#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

// Exact values of the two product bounds on B(n):
// bound1 = n^tau(n) * prod_{d|n} A(d), bound2 = n^tau(n) * A0(n)^tau(n).
struct ChainBounds {
    u64 n = 0;
    u64 tau = 0;
    BigInt a_product; // prod_{d|n} A(d)
    BigInt a0;
    u64 a0_witness = 1;
    BigInt bound1;
    BigInt bound2;
};
ChainBounds chain_bound(u64 n, CycloCache& cache); // n >= 2

// A(n) <= n^(2^(k-1)) with k = omega(n); exact integer comparison.
struct BatemanReport {
    unsigned k = 0;
    BigInt a;
    BigInt bound;
    bool holds = false;
};
BatemanReport bateman_check(u64 n, CycloCache& cache); // n >= 2

enum class CmpStatus { Pass, Fail, Borderline };

// Does value <= n^exponent? Compared through long-double logs with a 1e-12
// relative guard band; inside the band the comparison is redone exactly when
// the exponent is (numerically) a nonnegative integer, otherwise it is
// reported Borderline.
struct PowerCompare {
    CmpStatus status = CmpStatus::Borderline;
    long double margin = 0; // exponent*log n - log value
    bool exact = false;     // settled by exact integer comparison
};
PowerCompare compare_power(const BigInt& value, u64 n, long double exponent);

// log of a positive big integer in long double precision
long double log_big(const BigInt& v);

// sum_{k=1}^{omega(n)} 2^k log p_k(n), natural log. The constant C of the
// Maier key inequality is NOT folded in; callers supply it.
double maier_sum(u64 n); // n >= 2

// Both readings of the BPV exponent: the source is ambiguous between
// 2^(k-1)/k - 1 and 2^(k-1)/(k-1); no default truth is asserted.
struct BpvReport {
    unsigned k = 0;
    BigInt a;
    double exponent_minus_one = 0;         // 2^(k-1)/k - 1
    std::optional<double> exponent_over_km1; // 2^(k-1)/(k-1); absent at k = 1
    CmpStatus holds_minus_one = CmpStatus::Borderline;
    std::optional<CmpStatus> holds_over_km1;
};
BpvReport bpv_check(u64 n, CycloCache& cache); // n >= 2

struct MaierParams {
    double gamma = 0;
    double b = 0;
    double epsilon = 0;
    double c0 = 0; // epsilon*(b-1)*log gamma
    double C2 = 0;
    bool c2_empirical = false;
    bool has_c2 = false;
    double k0 = 0;
    bool has_k0 = false;
};

struct GridSearchResult {
    double b = 0;
    double epsilon = 0;
    double c0 = 0;
    double residual = 0; // (1+eps)(b-1)/log b * log gamma - 1, <= 0 when feasible
};

inline constexpr double kGridSearchResolution = 1e-3;

// Maximize c0 = eps*(b-1)*log gamma subject to
// (1+eps)(b-1)/log b * log gamma <= 1, by 2-D grid search with refinement
// down to `resolution` cell size. gamma must lie in (2, e).
GridSearchResult maier_grid_search(double gamma, double resolution = kGridSearchResolution);

// Grid-searched (b, eps, c0) for gamma; C2 and k0 unset.
MaierParams maier_constants(double gamma);
// Same, with a caller-supplied C2 (k0 follows from the Lemma 3.3 formula).
MaierParams maier_constants_with_c2(double gamma, double C2);
// Same, with C2 fitted as max over k of count_k / (x e^{-c0 k}) from observed
// exceedance counts at scan size x.
MaierParams maier_constants_fit_c2(double gamma, std::span<const std::pair<unsigned, u64>> counts, u64 x);

// k0 = log(eps(1 - e^{-c0})/C2) / (-c0); may be negative (callers then treat
// it as 1 and flag the configuration).
double k0_of(double c0, double C2, double epsilon);
inline double k0_of(const MaierParams& p, double epsilon) { return k0_of(p.c0, p.C2, epsilon); }

// B(n) <= n^(tau(n) psi(n))?
struct Theorem12Report {
    CmpStatus status = CmpStatus::Borderline;
    long double margin = 0;
    u64 tau = 0;
    bool exact = false;
};
Theorem12Report theorem12_check(u64 n, double psi_value, const BigInt& b_value);

} // namespace cyclo
