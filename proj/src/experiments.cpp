#include "cyclo/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <thread>

#include <nlohmann/json.hpp>

namespace cyclo {

namespace {

void require_gamma_range(double gamma) {
    if (!(gamma > 2.0 && gamma < std::numbers::e))
        throw DomainError("gamma must lie in (2, e)");
}

unsigned resolve_threads(int t) {
    if (t > 0) return static_cast<unsigned>(t);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Largest integer u with log(u) <= t (0 when t < 0).
u64 floor_exp(long double t) {
    if (t < 0) return 0;
    long double v = std::exp(t);
    u64 c = v < 1 ? 1 : static_cast<u64>(v);
    while (std::log(static_cast<long double>(c + 1)) <= t) ++c;
    while (c > 1 && std::log(static_cast<long double>(c)) > t) --c;
    return c;
}

// Smallest integer u >= 1 with log(u) >= t.
u64 ceil_exp(long double t) {
    const u64 c = floor_exp(t);
    if (c >= 1 && std::log(static_cast<long double>(c)) >= t) return c;
    return c + 1;
}

// Largest k with 2*3*5*...*p_k <= x.
unsigned max_omega_below(u64 x) {
    u64 primorial = 1;
    unsigned k = 0;
    for (u64 p : primes_up_to(64)) {
        if (primorial > x / p) break;
        primorial *= p;
        ++k;
    }
    return k;
}

// A(m) for squarefree m with omega(m) >= 2: truncated power-series product
// Phi_m(x) = prod_{e | m} (1 - x^e)^{mu(m/e)} to phi(m)/2 + 1 terms; the
// upper half of the coefficient vector mirrors the lower half.
void squarefree_height(const Factorization& f, std::vector<BigInt>& buf, BigInt& out) {
    const u64 window = f.totient() / 2 + 1;
    if (buf.size() < window) buf.resize(window);
    buf[0] = 1;
    for (u64 i = 1; i < window; ++i) buf[i] = 0;

    const unsigned om = f.omega();
    const u64 nsub = u64{1} << om;
    for (u64 sub = 0; sub < nsub; ++sub) {
        u64 e = 1;
        for (unsigned i = 0; i < om; ++i)
            if (sub & (u64{1} << i)) e *= f.factors()[i].p;
        if (e >= window) continue;
        const bool multiply = ((om - std::popcount(sub)) % 2) == 0; // mu(m/e) = +1
        if (multiply) {
            for (u64 i = window; i-- > e;)
                mpz_sub(buf[i].get_mpz_t(), buf[i].get_mpz_t(), buf[i - e].get_mpz_t());
        } else {
            for (u64 i = e; i < window; ++i)
                mpz_add(buf[i].get_mpz_t(), buf[i].get_mpz_t(), buf[i - e].get_mpz_t());
        }
    }

    out = 0;
    for (u64 i = 0; i < window; ++i)
        if (mpz_cmpabs(buf[i].get_mpz_t(), out.get_mpz_t()) > 0)
            mpz_abs(out.get_mpz_t(), buf[i].get_mpz_t());
}

} // namespace

Psi Psi::parse(const std::string& name) {
    if (name == "loglog") return {Kind::LogLog, 0};
    if (name == "logloglog") return {Kind::LogLogLog, 0};
    if (name == "sqrt_loglog") return {Kind::SqrtLogLog, 0};
    if (name.rfind("const:", 0) == 0) {
        double c = 0;
        try {
            std::size_t used = 0;
            c = std::stod(name.substr(6), &used);
            if (used != name.size() - 6) throw std::invalid_argument(name);
        } catch (const std::exception&) {
            throw ConfigError("psi: bad constant in '" + name + "'");
        }
        if (!(c > 0)) throw ConfigError("psi: const value must be positive");
        return {Kind::Const, c};
    }
    throw ConfigError("psi: unknown function '" + name +
                      "' (choose const:C, loglog, logloglog, sqrt_loglog)");
}

double Psi::operator()(u64 n) const {
    const double m = static_cast<double>(std::max<u64>(n, 16));
    switch (kind) {
        case Kind::Const: return c;
        case Kind::LogLog: return std::log(std::log(m));
        case Kind::LogLogLog: return std::log(std::log(std::log(m)));
        case Kind::SqrtLogLog: return std::sqrt(std::log(std::log(m)));
    }
    throw IntegrityError("psi: bad kind");
}

std::string Psi::name() const {
    switch (kind) {
        case Kind::Const: return "const:" + format_real(c);
        case Kind::LogLog: return "loglog";
        case Kind::LogLogLog: return "logloglog";
        case Kind::SqrtLogLog: return "sqrt_loglog";
    }
    throw IntegrityError("psi: bad kind");
}

std::vector<BigInt> bulk_heights(const SpfSieve& sieve, u64 x, int threads, CycloCache* write_through) {
    if (x < 1) throw DomainError("bulk_heights: x must be >= 1");
    if (x > sieve.limit()) throw DomainError("bulk_heights: x above sieve limit");

    std::vector<BigInt> table(x + 1);
    table[1] = 1;
    std::vector<std::pair<u64, BigInt>> ready; // primes, warm hits resolved inline
    std::vector<u64> work;
    for (u64 m = 2; m <= x; ++m) {
        // squarefree test by spf peeling
        u64 v = m;
        unsigned om = 0;
        bool squarefree = true;
        while (v > 1) {
            const u64 p = sieve.spf(v);
            v /= p;
            if (v % p == 0) {
                squarefree = false;
                break;
            }
            ++om;
        }
        if (!squarefree) continue;
        if (write_through && write_through->lookup_height(m, table[m])) continue;
        if (om == 1) {
            table[m] = 1; // Phi_p is 1 + x + ... + x^(p-1)
            ready.emplace_back(m, table[m]);
            continue;
        }
        work.push_back(m);
    }

    const unsigned nthreads = std::min<u64>(resolve_threads(threads), std::max<u64>(work.size(), 1));
    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t kChunk = 64;
    auto worker = [&](std::vector<std::pair<u64, BigInt>>& batch) {
        std::vector<BigInt> buf;
        for (;;) {
            const std::size_t lo = cursor.fetch_add(kChunk);
            if (lo >= work.size()) break;
            const std::size_t hi = std::min(work.size(), lo + kChunk);
            for (std::size_t i = lo; i < hi; ++i) {
                const u64 m = work[i];
                squarefree_height(sieve.factorize(m), buf, table[m]);
                if (write_through) batch.emplace_back(m, table[m]);
            }
        }
    };

    std::vector<std::vector<std::pair<u64, BigInt>>> batches(nthreads);
    if (nthreads <= 1) {
        worker(batches[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] { worker(batches[t]); });
        for (auto& th : pool) th.join();
    }

    if (write_through) {
        write_through->store_heights(std::move(ready));
        for (auto& b : batches) write_through->store_heights(std::move(b));
        BigInt one;
        if (!write_through->lookup_height(1, one)) write_through->store_height(1, table[1]);
    }
    return table;
}

void populate_heights(CycloCache& cache, const SpfSieve& sieve, u64 x, int threads) {
    bulk_heights(sieve, x, threads, &cache);
}

namespace {

// A0 and smallest-witness tables over squarefree m, by one ascending pass:
// A0(m) = max(A(m), A0(m/p) over p | m).
void a0_tables(const SpfSieve& sieve, u64 x, const std::vector<BigInt>& A,
               std::vector<BigInt>& a0, std::vector<u64>& wit) {
    a0.assign(x + 1, BigInt(0));
    wit.assign(x + 1, 0);
    a0[1] = 1;
    wit[1] = 1;
    for (u64 m = 2; m <= x; ++m) {
        if (A[m] == 0) continue; // not squarefree
        a0[m] = A[m];
        wit[m] = m;
        u64 v = m;
        while (v > 1) {
            const u64 p = sieve.spf(v);
            v /= p;
            const u64 s = m / p;
            const int cmp = mpz_cmp(a0[s].get_mpz_t(), a0[m].get_mpz_t());
            if (cmp > 0) {
                a0[m] = a0[s];
                wit[m] = wit[s];
            } else if (cmp == 0 && wit[s] < wit[m]) {
                wit[m] = wit[s];
            }
        }
    }
}

struct BlockOutput {
    std::string rows;
    std::vector<CacheEntry> new_entries;
    std::map<int, DecadeStat> decades;
    u64 prop21_exceptions = 0;
    u64 prop21_borderline = 0;
    u64 b_computed = 0;
    u64 thm12_exceptions = 0;
    u64 thm12_borderline = 0;
    u64 cache_hits = 0;
};

} // namespace

std::string scan_csv_header() {
    return "n,tau,omega,A,A0,A0_witness,B,psi,prop21_pass,theorem12_pass";
}

std::string ScanSummary::to_json() const {
    nlohmann::ordered_json j;
    j["x_max"] = x_max;
    j["psi"] = psi;
    j["b_tau"] = b_tau;
    j["rows"] = rows;
    j["n_range_note"] = "records cover 2 <= n <= x_max";
    j["prop21"] = {{"exceptions", prop21_exceptions},
                   {"borderline", prop21_borderline},
                   {"exception_density", prop21_exception_density}};
    j["theorem12"] = {{"b_computed", b_computed},
                      {"exceptions", thm12_exceptions},
                      {"borderline", thm12_borderline}};
    j["cache_hits"] = cache_hits;
    nlohmann::ordered_json ds = nlohmann::ordered_json::array();
    for (const auto& d : decades) {
        nlohmann::ordered_json e;
        e["lo"] = d.lo;
        e["hi"] = d.hi;
        e["rows"] = d.rows;
        e["prop21_exceptions"] = d.prop21_exceptions;
        e["prop21_density"] = d.rows == 0 ? 0.0 : static_cast<double>(d.prop21_exceptions) / d.rows;
        e["b_computed"] = d.b_computed;
        e["theorem12_exceptions"] = d.thm12_exceptions;
        ds.push_back(std::move(e));
    }
    j["decades"] = std::move(ds);
    return j.dump(2);
}

ScanSummary scan_heights(const ScanOptions& opts, CycloCache& cache) {
    if (opts.x_max < 2) throw DomainError("scan_heights: x_max must be >= 2");
    const unsigned nthreads = resolve_threads(opts.threads);

    SpfSieve sieve(opts.x_max);
    const std::vector<BigInt> A = bulk_heights(sieve, opts.x_max, opts.threads, &cache);
    std::vector<BigInt> a0;
    std::vector<u64> wit;
    a0_tables(sieve, opts.x_max, A, a0, wit);

    CacheStore store;
    std::string warning;
    const bool use_store = !opts.cache_path.empty();
    if (use_store) {
        store = CacheStore::load(opts.cache_path, &warning);
        if (!warning.empty()) std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }

    auto run_block = [&](BlockOutput& out, u64 lo, u64 hi) {
        for (u64 n = lo; n < hi; ++n) {
            const Factorization f = sieve.factorize(n);
            const u64 tau_n = f.tau();
            const u64 rad = f.radical();
            const double psi_n = opts.psi(n);

            const PowerCompare p21 = compare_power(a0[rad], n, psi_n);
            if (p21.status == CmpStatus::Fail) ++out.prop21_exceptions;
            if (p21.status == CmpStatus::Borderline) ++out.prop21_borderline;

            std::string b_text;
            std::string thm12_text;
            if (opts.b_tau > 0 && tau_n <= opts.b_tau && tau_n <= 62) {
                BigInt b_value;
                const CacheEntry* hit = use_store ? store.find(n) : nullptr;
                if (hit && hit->B) {
                    try {
                        b_value = BigInt(*hit->B, 10);
                    } catch (const std::invalid_argument&) {
                        throw IoError("cache: bad B value for n=" + std::to_string(n));
                    }
                    ++out.cache_hits;
                } else {
                    BnOptions bo;
                    bo.max_tau = opts.b_tau;
                    BnResult r = height_B(n, bo, cache);
                    b_value = std::move(r.b_value);
                    CacheEntry e;
                    e.n = n;
                    e.A = A[rad].get_str();
                    e.A0 = a0[rad].get_str();
                    e.B = b_value.get_str();
                    e.b_witness = std::move(r.witness);
                    out.new_entries.push_back(std::move(e));
                }
                ++out.b_computed;
                const Theorem12Report t12 = theorem12_check(n, psi_n, b_value);
                if (t12.status == CmpStatus::Fail) ++out.thm12_exceptions;
                if (t12.status == CmpStatus::Borderline) ++out.thm12_borderline;
                b_text = b_value.get_str();
                thm12_text = t12.status == CmpStatus::Fail ? "0" : "1";
            }

            int decade = 0;
            for (u64 v = n; v >= 10; v /= 10) ++decade;
            DecadeStat& ds = out.decades[decade];
            ++ds.rows;
            if (p21.status == CmpStatus::Fail) ++ds.prop21_exceptions;
            if (!b_text.empty()) {
                ++ds.b_computed;
                if (thm12_text == "0") ++ds.thm12_exceptions;
            }

            out.rows += std::to_string(n);
            out.rows += ',';
            out.rows += std::to_string(tau_n);
            out.rows += ',';
            out.rows += std::to_string(f.omega());
            out.rows += ',';
            out.rows += A[rad].get_str();
            out.rows += ',';
            out.rows += a0[rad].get_str();
            out.rows += ',';
            out.rows += std::to_string(wit[rad]);
            out.rows += ',';
            out.rows += b_text;
            out.rows += ',';
            out.rows += format_real(psi_n);
            out.rows += ',';
            out.rows += p21.status == CmpStatus::Fail ? '0' : '1';
            out.rows += ',';
            out.rows += thm12_text;
            out.rows += '\n';
        }
    };

    ScanSummary sum;
    sum.x_max = opts.x_max;
    sum.psi = opts.psi.name();
    sum.b_tau = opts.b_tau;
    sum.rows = opts.x_max - 1;

    std::ofstream csv;
    if (!opts.csv_path.empty()) {
        csv.open(opts.csv_path, std::ios::binary | std::ios::trunc);
        if (!csv) throw IoError("scan: cannot write " + opts.csv_path);
        csv << scan_csv_header() << '\n';
    }

    // Blocks of kScanCheckpointRows rows, processed a thread-batch at a time;
    // merged strictly in n order, with cache appends at each block boundary.
    std::map<int, DecadeStat> decades;
    const u64 block_rows = std::max<u64>(1, std::min<u64>(kScanCheckpointRows, (sum.rows + nthreads - 1) / nthreads));
    u64 next_n = 2;
    while (next_n <= opts.x_max) {
        std::vector<BlockOutput> outs;
        std::vector<std::pair<u64, u64>> ranges;
        while (ranges.size() < nthreads && next_n <= opts.x_max) {
            const u64 hi = std::min(opts.x_max + 1, next_n + block_rows);
            ranges.emplace_back(next_n, hi);
            next_n = hi;
        }
        outs.resize(ranges.size());
        if (ranges.size() == 1) {
            run_block(outs[0], ranges[0].first, ranges[0].second);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t i = 0; i < ranges.size(); ++i)
                pool.emplace_back([&, i] { run_block(outs[i], ranges[i].first, ranges[i].second); });
            for (auto& th : pool) th.join();
        }
        for (BlockOutput& out : outs) {
            if (csv.is_open()) csv << out.rows;
            sum.prop21_exceptions += out.prop21_exceptions;
            sum.prop21_borderline += out.prop21_borderline;
            sum.b_computed += out.b_computed;
            sum.thm12_exceptions += out.thm12_exceptions;
            sum.thm12_borderline += out.thm12_borderline;
            sum.cache_hits += out.cache_hits;
            for (auto& [d, s] : out.decades) {
                DecadeStat& tgt = decades[d];
                tgt.rows += s.rows;
                tgt.prop21_exceptions += s.prop21_exceptions;
                tgt.b_computed += s.b_computed;
                tgt.thm12_exceptions += s.thm12_exceptions;
            }
            if (use_store && !out.new_entries.empty())
                CacheStore::append(opts.cache_path, out.new_entries);
        }
    }

    if (csv.is_open()) {
        csv.flush();
        if (!csv) throw IoError("scan: write failed for " + opts.csv_path);
    }

    for (auto& [d, s] : decades) {
        u64 lo = 1;
        for (int i = 0; i < d; ++i) lo *= 10;
        DecadeStat row = s;
        row.lo = std::max<u64>(2, lo);
        row.hi = std::min<u64>(opts.x_max, lo * 10 - 1);
        sum.decades.push_back(row);
    }
    sum.prop21_exception_density = static_cast<double>(sum.prop21_exceptions) / static_cast<double>(opts.x_max);

    if (!opts.summary_path.empty()) {
        std::ofstream js(opts.summary_path, std::ios::binary | std::ios::trunc);
        if (!js) throw IoError("scan: cannot write " + opts.summary_path);
        js << sum.to_json() << '\n';
        js.flush();
        if (!js) throw IoError("scan: write failed for " + opts.summary_path);
    }
    return sum;
}

Lemma31Result lemma31_density(u64 x, double gamma) {
    if (x < 3) throw DomainError("lemma31_density: x must be >= 3");
    require_gamma_range(gamma);
    std::vector<std::uint8_t> om(x + 1, 0);
    for (u64 p = 2; p <= x; ++p) {
        if (om[p] != 0) continue;
        for (u64 j = p; j <= x; j += p) ++om[j];
    }
    const long double lg = std::log(static_cast<long double>(gamma));
    u64 count = 0;
    for (u64 n = 3; n <= x; ++n) {
        const long double th = std::log(std::log(static_cast<long double>(n))) / lg;
        if (static_cast<long double>(om[n]) >= th) ++count;
    }
    return {x, gamma, count, static_cast<double>(count) / static_cast<double>(x)};
}

std::vector<std::pair<unsigned, u64>> lemma32_counts(u64 x, double gamma, const SpfSieve& sieve,
                                                     unsigned k_hi) {
    require_gamma_range(gamma);
    if (x < 2 || x > sieve.limit()) throw DomainError("lemma32_counts: bad x");
    const long double logx = std::log(static_cast<long double>(x));
    std::vector<u64> cutoff(k_hi + 1, 0);
    long double g_pow = 1;
    for (unsigned k = 1; k <= k_hi; ++k) {
        g_pow *= gamma;
        cutoff[k] = floor_exp(logx / g_pow);
    }
    std::vector<u64> count(k_hi + 1, 0);
    for (u64 n = 2; n <= x; ++n) {
        const Factorization f = sieve.factorize(n);
        const unsigned lim = std::min(f.omega(), k_hi);
        for (unsigned k = 1; k <= lim; ++k)
            if (f.factors()[k - 1].p > cutoff[k]) ++count[k];
    }
    std::vector<std::pair<unsigned, u64>> out;
    for (unsigned k = 1; k <= k_hi; ++k) out.emplace_back(k, count[k]);
    return out;
}

Lemma32Profile lemma32_profile(u64 x, double gamma, const MaierParams& params) {
    if (x < 16) throw DomainError("lemma32_profile: x must be >= 16");
    require_gamma_range(gamma);
    if (!params.has_c2) throw ContractError("lemma32_profile: params carry no C2");
    if (std::fabs(params.gamma - gamma) > 1e-12)
        throw ContractError("lemma32_profile: params were derived for a different gamma");

    SpfSieve sieve(x);
    Lemma32Profile prof;
    prof.x = x;
    prof.gamma = gamma;
    prof.params = params;
    const long double logx = std::log(static_cast<long double>(x));
    prof.k_limit = static_cast<double>(std::log(logx) / std::log(static_cast<long double>(gamma)));

    const unsigned k_hi = std::max(1u, max_omega_below(x));
    std::vector<u64> cutoff(k_hi + 1, 0), interval_lo(k_hi + 1, 0);
    long double g_pow = 1;
    for (unsigned k = 1; k <= k_hi; ++k) {
        g_pow *= gamma;
        cutoff[k] = floor_exp(logx / g_pow);
        interval_lo[k] = ceil_exp(logx / g_pow); // primes in [t_k, x] are those >= this
    }

    std::vector<u64> count(k_hi + 1, 0);
    std::vector<std::vector<u64>> hist(k_hi + 1, std::vector<u64>(k_hi + 2, 0));
    for (u64 n = 2; n <= x; ++n) {
        const Factorization f = sieve.factorize(n);
        const unsigned om = f.omega();
        for (unsigned k = 1; k <= k_hi; ++k) {
            if (k <= om && f.factors()[k - 1].p > cutoff[k]) ++count[k];
            unsigned in_interval = 0;
            while (in_interval < om && f.factors()[in_interval].p >= interval_lo[k]) ++in_interval;
            ++hist[k][in_interval];
        }
    }

    for (unsigned k = 1; k <= k_hi; ++k) {
        Lemma32Row row;
        row.k = k;
        row.in_lemma_range = static_cast<double>(k) < prof.k_limit;
        row.pk_cutoff = cutoff[k];
        row.count = count[k];
        row.bound = params.C2 * static_cast<double>(x) * std::exp(-params.c0 * k);
        row.ratio = row.bound == 0 ? 0 : static_cast<double>(count[k]) / row.bound;
        row.omega_interval_hist = hist[k];
        while (row.omega_interval_hist.size() > 1 && row.omega_interval_hist.back() == 0)
            row.omega_interval_hist.pop_back();
        prof.rows.push_back(std::move(row));
    }
    return prof;
}

Lemma33Result lemma33_count(u64 x, const MaierParams& params, double epsilon) {
    if (x < 16) throw DomainError("lemma33_count: x must be >= 16");
    if (!(epsilon > 0)) throw DomainError("lemma33_count: epsilon must be positive");
    if (!params.has_c2) throw ContractError("lemma33_count: params carry no C2");
    require_gamma_range(params.gamma);

    Lemma33Result res;
    res.x = x;
    res.epsilon = epsilon;
    res.k0 = k0_of(params.c0, params.C2, epsilon);
    res.degenerate_k0 = res.k0 < 1;
    res.k_start = res.degenerate_k0 ? 1u : static_cast<unsigned>(std::ceil(res.k0));
    const long double logx = std::log(static_cast<long double>(x));
    res.k_limit = static_cast<double>(std::log(logx) / std::log(static_cast<long double>(params.gamma)));
    res.k0_beyond_lemma_range = res.k0 >= res.k_limit;
    res.bound = 2.0 * epsilon * static_cast<double>(x);

    const unsigned k_hi = std::max(1u, max_omega_below(x));
    if (res.k_start <= k_hi) {
        SpfSieve sieve(x);
        std::vector<u64> cutoff(k_hi + 1, 0);
        long double g_pow = 1;
        for (unsigned k = 1; k <= k_hi; ++k) {
            g_pow *= params.gamma;
            cutoff[k] = floor_exp(logx / g_pow);
        }
        for (u64 n = 2; n <= x; ++n) {
            const Factorization f = sieve.factorize(n);
            const unsigned om = f.omega();
            for (unsigned k = res.k_start; k <= om; ++k) {
                if (f.factors()[k - 1].p > cutoff[k]) {
                    ++res.count;
                    break;
                }
            }
        }
    }
    res.holds = static_cast<double>(res.count) <= res.bound;
    return res;
}

MaierParams fit_maier_constants(double gamma, u64 x) {
    if (x < 16) throw DomainError("fit_maier_constants: x must be >= 16");
    require_gamma_range(gamma);
    const long double logx = std::log(static_cast<long double>(x));
    const double k_limit = static_cast<double>(std::log(logx) / std::log(static_cast<long double>(gamma)));
    unsigned K = 0;
    while (static_cast<double>(K + 1) < k_limit) ++K;
    if (K == 0) throw DomainError("fit_maier_constants: no k satisfies k < log log x / log gamma");
    SpfSieve sieve(x);
    const auto counts = lemma32_counts(x, gamma, sieve, K);
    return maier_constants_fit_c2(gamma, counts, x);
}

MaierCEstimate estimate_maier_C(u64 x, CycloCache& cache) {
    if (x < 2) throw DomainError("estimate_maier_C: x must be >= 2");
    SpfSieve sieve(x);
    const std::vector<BigInt> A = bulk_heights(sieve, x, 0, &cache);
    MaierCEstimate best;
    for (u64 m = 2; m <= x; ++m) {
        if (A[m] == 0 || A[m] == 1) continue; // non-squarefree slot or log A = 0
        long double s = 0, w = 1;
        const Factorization f = sieve.factorize(m);
        for (unsigned k = 1; k <= f.omega(); ++k) {
            w *= 2;
            s += w * std::log(static_cast<long double>(f.factors()[k - 1].p));
        }
        const double ratio = static_cast<double>(log_big(A[m]) / s);
        if (ratio > best.value) {
            best.value = ratio;
            best.argmax = m;
        }
    }
    return best;
}

MertensResult mertens_sum_check(u64 limit, unsigned nu_max) {
    if (limit < 2) throw DomainError("mertens_sum_check: limit must be >= 2");
    if (nu_max < 2) throw DomainError("mertens_sum_check: nu_max must be >= 2");
    MertensResult res;
    res.limit = limit;
    res.nu_max = nu_max;
    long double right = 0, left = 0;
    for (u64 p : primes_up_to(limit)) {
        const long double lp = std::log(static_cast<long double>(p));
        const long double pl = static_cast<long double>(p);
        right += lp / (pl * (pl - 1));
        const long double inv = 1.0L / pl;
        long double term = inv * inv;
        long double s = 0;
        for (unsigned nu = 2; nu <= nu_max; ++nu) {
            s += static_cast<long double>(nu) * term;
            term *= inv;
            if (term < 1e-30L) break;
        }
        left += s * lp;
    }
    res.right_form = static_cast<double>(2 * right);
    res.left_form = static_cast<double>(left);
    res.difference = res.left_form - res.right_form;
    res.below_four = res.right_form < 4.0;
    return res;
}

} // namespace cyclo
