#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/bounds.hpp"
#include "cyclo/cache_store.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/search.hpp"

namespace cyclo {

// Named psi-function menu. Iterated logs evaluate at max(n, 16) so every menu
// entry is defined and positive for all n >= 1.
struct Psi {
    enum class Kind { Const, LogLog, LogLogLog, SqrtLogLog };
    Kind kind = Kind::Const;
    double c = 1.0;

    static Psi parse(const std::string& name); // ConfigError on unknown name
    double operator()(u64 n) const;
    std::string name() const;
};

// A(m) for every squarefree m <= x, as a dense table (index m; slot 0 at
// non-squarefree m). Heights are computed with a truncated power-series
// product over the divisors of m (half the degree, using the palindromic
// coefficient symmetry of Phi_m) and written through to the cache, where
// single-query paths will find them memoized. This bulk route exists because
// the per-query division route is quadratic per m and unusable at scan scale;
// the two routes are cross-checked in the test suite.
std::vector<BigInt> bulk_heights(const SpfSieve& sieve, u64 x, int threads, CycloCache* write_through);

// Convenience: bulk-populate the cache only.
void populate_heights(CycloCache& cache, const SpfSieve& sieve, u64 x, int threads);

struct HeightRecord {
    u64 n = 0;
    u64 tau = 0;
    unsigned omega = 0;
    BigInt A;
    BigInt A0;
    u64 a0_witness = 1;
    std::optional<BigInt> B;
    std::optional<std::vector<u64>> b_witness;
    double psi_value = 0;
    bool prop21_pass = true; // A0(n) <= n^psi(n)
    std::optional<bool> theorem12_pass;
};

struct DecadeStat {
    u64 lo = 0, hi = 0; // inclusive n range covered by this decade
    u64 rows = 0;
    u64 prop21_exceptions = 0;
    u64 b_computed = 0;
    u64 thm12_exceptions = 0;
};

struct ScanSummary {
    u64 x_max = 0;
    std::string psi;
    unsigned b_tau = 0;
    u64 rows = 0;
    u64 prop21_exceptions = 0;
    u64 prop21_borderline = 0;
    double prop21_exception_density = 0; // exceptions / x_max
    u64 b_computed = 0;
    u64 thm12_exceptions = 0;
    u64 thm12_borderline = 0;
    std::vector<DecadeStat> decades;
    u64 cache_hits = 0;

    std::string to_json() const;
};

struct ScanOptions {
    u64 x_max = 0;
    Psi psi{};
    unsigned b_tau = 0; // compute B(n) when tau(n) <= b_tau; 0 disables
    int threads = 1;
    std::string csv_path;     // empty: no CSV written
    std::string summary_path; // empty: no summary written
    std::string cache_path;   // empty: persistent cache disabled
};

inline constexpr u64 kScanCheckpointRows = 100000;

// One HeightRecord per 2 <= n <= x_max, streamed to CSV in ascending n order;
// returns the run summary. With a cache path, previously computed B values
// are reused and new rows are appended every kScanCheckpointRows rows.
ScanSummary scan_heights(const ScanOptions& opts, CycloCache& cache);

// CSV header used by scan_heights.
std::string scan_csv_header();

// #{3 <= n <= x : omega(n) >= log log n / log gamma} and its density wrt x.
// n = 1, 2 are excluded (log log n undefined) and documented in outputs.
struct Lemma31Result {
    u64 x = 0;
    double gamma = 0;
    u64 count = 0;
    double density = 0;
};
Lemma31Result lemma31_density(u64 x, double gamma); // x >= 3

// Exceedance counts per k: #{n <= x : log p_k(n) > gamma^{-k} log x}.
std::vector<std::pair<unsigned, u64>> lemma32_counts(u64 x, double gamma, const SpfSieve& sieve,
                                                     unsigned k_hi);

struct Lemma32Row {
    unsigned k = 0;
    bool in_lemma_range = false;
    u64 pk_cutoff = 0; // n is counted iff p_k(n) > pk_cutoff
    u64 count = 0;
    double bound = 0; // C2 * x * e^{-c0 k}
    double ratio = 0; // count / bound
    std::vector<u64> omega_interval_hist; // index c: #{n <= x : omega([t_k, x], n) = c}
};

struct Lemma32Profile {
    u64 x = 0;
    double gamma = 0;
    double k_limit = 0; // log log x / log gamma
    MaierParams params;
    std::vector<Lemma32Row> rows;
};

// Full Lemma 3.2 profile; params must carry C2. Rows cover k = 1 up to the
// largest omega(n) observed, with k < k_limit flagged in_lemma_range.
Lemma32Profile lemma32_profile(u64 x, double gamma, const MaierParams& params); // x >= 16

struct Lemma33Result {
    u64 x = 0;
    double epsilon = 0;
    double k0 = 0;
    unsigned k_start = 0; // max(1, ceil(k0))
    u64 count = 0;
    double bound = 0; // 2 * epsilon * x
    bool holds = false;
    bool degenerate_k0 = false;       // k0 < 1
    bool k0_beyond_lemma_range = false; // k0 >= log log x / log gamma
    double k_limit = 0;
};

// #{n <= x : log p_k(n) > gamma^{-k} log x for some k >= k0} vs 2*eps*x,
// where k0 comes from the Lemma 3.3 formula at this eps.
Lemma33Result lemma33_count(u64 x, const MaierParams& params, double epsilon); // params needs C2

// Grid search + empirical C2 fit from the lemma32 exceedance counts at x.
MaierParams fit_maier_constants(double gamma, u64 x);

struct MaierCEstimate {
    double value = 0; // max over squarefree 2 <= n <= x of log A(n) / maier_sum(n)
    u64 argmax = 0;   // 0 when every A(n) = 1 in range
};
MaierCEstimate estimate_maier_C(u64 x, CycloCache& cache); // x >= 2

struct MertensResult {
    u64 limit = 0;
    unsigned nu_max = 0;
    double right_form = 0; // 2 sum_{p<=limit} log p / (p(p-1))
    double left_form = 0;  // sum_p sum_{2<=nu<=nu_max} nu p^-nu log p
    double difference = 0; // left_form - right_form
    bool below_four = false;
};
MertensResult mertens_sum_check(u64 limit, unsigned nu_max = 40); // limit >= 2

} // namespace cyclo
