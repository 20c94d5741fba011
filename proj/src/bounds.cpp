#include "cyclo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cyclo {

namespace {

void require_n_ge_2(u64 n, const char* who) {
    if (n < 2) throw DomainError(std::string(who) + ": n must be >= 2");
}

void require_gamma(double gamma) {
    if (!(gamma > 2.0 && gamma < std::numbers::e))
        throw DomainError("gamma must lie in (2, e)");
}

} // namespace

long double log_big(const BigInt& v) {
    if (v <= 0) throw DomainError("log_big: value must be positive");
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(static_cast<long double>(d)) +
           static_cast<long double>(e) * std::numbers::ln2_v<long double>;
}

ChainBounds chain_bound(u64 n, CycloCache& cache) {
    require_n_ge_2(n, "chain_bound");
    ChainBounds out;
    out.n = n;
    const std::vector<u64> divs = divisors(n);
    out.tau = divs.size();
    out.a_product = 1;
    for (u64 d : divs) out.a_product *= height_A(d, cache);
    auto a0 = height_A0(n, cache);
    out.a0 = std::move(a0.value);
    out.a0_witness = a0.witness;

    BigInt n_tau;
    mpz_ui_pow_ui(n_tau.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(out.tau));
    out.bound1 = n_tau * out.a_product;
    BigInt a0_tau;
    mpz_pow_ui(a0_tau.get_mpz_t(), out.a0.get_mpz_t(), static_cast<unsigned long>(out.tau));
    out.bound2 = n_tau * a0_tau;
    return out;
}

BatemanReport bateman_check(u64 n, CycloCache& cache) {
    require_n_ge_2(n, "bateman_check");
    BatemanReport r;
    r.k = omega(n);
    r.a = height_A(n, cache);
    mpz_ui_pow_ui(r.bound.get_mpz_t(), static_cast<unsigned long>(n), 1ul << (r.k - 1));
    r.holds = r.a <= r.bound;
    return r;
}

PowerCompare compare_power(const BigInt& value, u64 n, long double exponent) {
    if (n < 2) throw DomainError("compare_power: n must be >= 2");
    PowerCompare out;
    if (value <= 0) { // heights are >= 1 in practice; 0 passes trivially
        out.status = CmpStatus::Pass;
        out.margin = 0;
        return out;
    }
    const long double lhs = log_big(value);
    const long double rhs = exponent * std::log(static_cast<long double>(n));
    out.margin = rhs - lhs;
    const long double scale = std::max({1.0L, std::fabs(lhs), std::fabs(rhs)});
    if (out.margin / scale > 1e-12L) {
        out.status = CmpStatus::Pass;
        return out;
    }
    if (out.margin / scale < -1e-12L) {
        out.status = CmpStatus::Fail;
        return out;
    }
    const long double rounded = std::nearbyint(exponent);
    const bool integral = std::fabs(exponent - rounded) <= 1e-9L && rounded >= 0;
    // cap the exact power at ~10^7 bits
    if (integral && rounded * std::log2(static_cast<long double>(n)) < 1e7L) {
        BigInt pow;
        mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(rounded));
        out.exact = true;
        out.status = value <= pow ? CmpStatus::Pass : CmpStatus::Fail;
        return out;
    }
    out.status = CmpStatus::Borderline;
    return out;
}

double maier_sum(u64 n) {
    require_n_ge_2(n, "maier_sum");
    const Factorization f = Factorization::of(n);
    long double s = 0;
    long double w = 1;
    for (unsigned k = 1; k <= f.omega(); ++k) {
        w *= 2;
        s += w * std::log(static_cast<long double>(f.p_k(k)));
    }
    return static_cast<double>(s);
}

BpvReport bpv_check(u64 n, CycloCache& cache) {
    require_n_ge_2(n, "bpv_check");
    BpvReport r;
    r.k = omega(n);
    r.a = height_A(n, cache);
    const double pow2 = std::ldexp(1.0, static_cast<int>(r.k) - 1); // 2^(k-1)
    r.exponent_minus_one = pow2 / r.k - 1.0;
    r.holds_minus_one = compare_power(r.a, n, r.exponent_minus_one).status;
    if (r.k >= 2) {
        r.exponent_over_km1 = pow2 / (r.k - 1);
        r.holds_over_km1 = compare_power(r.a, n, *r.exponent_over_km1).status;
    }
    return r;
}

GridSearchResult maier_grid_search(double gamma, double resolution) {
    require_gamma(gamma);
    if (!(resolution > 0)) throw DomainError("maier_grid_search: resolution must be positive");
    const double lg = std::log(gamma);
    const auto residual = [lg](double b, double eps) {
        return (1.0 + eps) * (b - 1.0) / std::log(b) * lg - 1.0;
    };

    double blo = 1.0 + 1e-9, bhi = 3.0;
    double elo = 1e-9, ehi = 2.0;
    constexpr int kCells = 200;
    GridSearchResult best;
    bool found = false;
    while (true) {
        const double db = (bhi - blo) / kCells;
        const double de = (ehi - elo) / kCells;
        double round_b = best.b, round_e = best.epsilon;
        for (int i = 0; i <= kCells; ++i) {
            const double b = blo + i * db;
            for (int j = 0; j <= kCells; ++j) {
                const double eps = elo + j * de;
                const double res = residual(b, eps);
                if (res > 0) continue;
                const double c0 = eps * (b - 1.0) * lg;
                if (!found || c0 > best.c0) {
                    best = {b, eps, c0, res};
                    found = true;
                    round_b = b;
                    round_e = eps;
                }
            }
        }
        if (db <= resolution && de <= resolution) break;
        if (!found) throw IntegrityError("maier_grid_search: no feasible grid point");
        blo = std::max(1.0 + 1e-9, round_b - 2 * db);
        bhi = round_b + 2 * db;
        elo = std::max(1e-9, round_e - 2 * de);
        ehi = round_e + 2 * de;
    }
    if (!found) throw IntegrityError("maier_grid_search: no feasible grid point");
    return best;
}

MaierParams maier_constants(double gamma) {
    const GridSearchResult g = maier_grid_search(gamma);
    MaierParams p;
    p.gamma = gamma;
    p.b = g.b;
    p.epsilon = g.epsilon;
    p.c0 = g.c0;
    return p;
}

MaierParams maier_constants_with_c2(double gamma, double C2) {
    if (!(C2 > 0)) throw DomainError("maier_constants: C2 must be positive");
    MaierParams p = maier_constants(gamma);
    p.C2 = C2;
    p.has_c2 = true;
    p.c2_empirical = false;
    p.k0 = k0_of(p.c0, p.C2, p.epsilon);
    p.has_k0 = true;
    return p;
}

MaierParams maier_constants_fit_c2(double gamma, std::span<const std::pair<unsigned, u64>> counts, u64 x) {
    if (x == 0) throw DomainError("maier_constants: x must be >= 1");
    MaierParams p = maier_constants(gamma);
    double c2 = 0;
    for (const auto& [k, count] : counts) {
        const double bound_unit = static_cast<double>(x) * std::exp(-p.c0 * k);
        c2 = std::max(c2, static_cast<double>(count) / bound_unit);
    }
    p.C2 = c2;
    p.has_c2 = true;
    p.c2_empirical = true;
    if (c2 > 0) {
        p.k0 = k0_of(p.c0, p.C2, p.epsilon);
        p.has_k0 = true;
    }
    return p;
}

double k0_of(double c0, double C2, double epsilon) {
    if (!(c0 > 0)) throw DomainError("k0_of: c0 must be positive");
    if (!(C2 > 0)) throw DomainError("k0_of: C2 must be positive");
    if (!(epsilon > 0)) throw DomainError("k0_of: epsilon must be positive");
    return std::log(epsilon * (1.0 - std::exp(-c0)) / C2) / (-c0);
}

Theorem12Report theorem12_check(u64 n, double psi_value, const BigInt& b_value) {
    require_n_ge_2(n, "theorem12_check");
    if (!(psi_value > 0)) throw DomainError("theorem12_check: psi must be positive");
    Theorem12Report r;
    r.tau = tau(n);
    const PowerCompare c =
        compare_power(b_value, n, static_cast<long double>(r.tau) * psi_value);
    r.status = c.status;
    r.margin = c.margin;
    r.exact = c.exact;
    return r;
}

} // namespace cyclo
