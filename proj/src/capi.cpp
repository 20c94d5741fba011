#include "cyclo/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "cyclo/bounds.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/experiments.hpp"
#include "cyclo/search.hpp"

using nlohmann::ordered_json;

struct cyclo_ctx {
    cyclo::CycloCacheOptions opts;
    std::unique_ptr<cyclo::CycloCache> cache = std::make_unique<cyclo::CycloCache>();
    int threads = 0;
    cyclo_status status = CYCLO_OK;
    std::string error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void clear_status(cyclo_ctx* ctx) {
    ctx->status = CYCLO_OK;
    ctx->error.clear();
}

template <typename Fn>
char* guarded(cyclo_ctx* ctx, Fn&& fn) {
    if (ctx == nullptr) return nullptr;
    clear_status(ctx);
    try {
        return dup_string(fn());
    } catch (const cyclo::DomainError& e) {
        ctx->status = CYCLO_ERR_DOMAIN;
        ctx->error = e.what();
    } catch (const cyclo::ConfigError& e) {
        ctx->status = CYCLO_ERR_CONFIG;
        ctx->error = e.what();
    } catch (const cyclo::BudgetError& e) {
        ctx->status = CYCLO_ERR_BUDGET;
        ctx->error = e.what();
    } catch (const cyclo::ResourceError& e) {
        ctx->status = CYCLO_ERR_RESOURCE;
        ctx->error = e.what();
    } catch (const cyclo::IoError& e) {
        ctx->status = CYCLO_ERR_IO;
        ctx->error = e.what();
    } catch (const cyclo::ContractError& e) {
        ctx->status = CYCLO_ERR_CONTRACT;
        ctx->error = e.what();
    } catch (const cyclo::IntegrityError& e) {
        ctx->status = CYCLO_ERR_INTEGRITY;
        ctx->error = e.what();
    } catch (const std::exception& e) {
        ctx->status = CYCLO_ERR_INTERNAL;
        ctx->error = e.what();
    } catch (...) {
        ctx->status = CYCLO_ERR_INTERNAL;
        ctx->error = "unknown error";
    }
    return nullptr;
}

const char* cmp_name(cyclo::CmpStatus s) {
    switch (s) {
        case cyclo::CmpStatus::Pass: return "pass";
        case cyclo::CmpStatus::Fail: return "fail";
        case cyclo::CmpStatus::Borderline: return "borderline";
    }
    return "?";
}

cyclo::MaierParams params_for(double gamma, int c2_mode, double c2, uint64_t fit_x) {
    switch (c2_mode) {
        case 0: return cyclo::maier_constants(gamma);
        case 1: return cyclo::maier_constants_with_c2(gamma, c2);
        case 2: return cyclo::fit_maier_constants(gamma, fit_x);
        default: throw cyclo::ContractError("c2_mode must be 0, 1 or 2");
    }
}

ordered_json params_json(const cyclo::MaierParams& p) {
    ordered_json j;
    j["gamma"] = p.gamma;
    j["b"] = p.b;
    j["epsilon"] = p.epsilon;
    j["c0"] = p.c0;
    j["constraint_residual"] =
        (1.0 + p.epsilon) * (p.b - 1.0) / std::log(p.b) * std::log(p.gamma) - 1.0;
    if (p.has_c2) {
        j["C2"] = p.C2;
        j["C2_mode"] = p.c2_empirical ? "empirical" : "explicit";
    }
    if (p.has_k0) j["k0"] = p.k0;
    return j;
}

} // namespace

extern "C" {

cyclo_ctx* cyclo_ctx_new(void) { return new (std::nothrow) cyclo_ctx; }

void cyclo_ctx_free(cyclo_ctx* ctx) { delete ctx; }

void cyclo_ctx_set_threads(cyclo_ctx* ctx, int threads) {
    if (ctx != nullptr) ctx->threads = threads;
}

void cyclo_ctx_set_poly_retention(cyclo_ctx* ctx, uint64_t limit) {
    if (ctx == nullptr) return;
    ctx->opts.poly_retention_limit = limit;
    ctx->cache = std::make_unique<cyclo::CycloCache>(ctx->opts);
}

cyclo_status cyclo_ctx_status(const cyclo_ctx* ctx) {
    return ctx == nullptr ? CYCLO_ERR_INTERNAL : ctx->status;
}

const char* cyclo_ctx_error(const cyclo_ctx* ctx) {
    return ctx == nullptr ? "null context" : ctx->error.c_str();
}

void cyclo_str_free(char* s) { std::free(s); }

char* cyclo_phi_json(cyclo_ctx* ctx, uint64_t n) {
    return guarded(ctx, [&] {
        const cyclo::IntPoly p = cyclo::cyclotomic(n, *ctx->cache);
        ordered_json j;
        j["n"] = n;
        j["degree"] = p.degree();
        j["coeffs"] = ordered_json::parse(p.to_json());
        j["height"] = p.height().get_str();
        j["text"] = p.to_string();
        return j.dump();
    });
}

char* cyclo_height_a(cyclo_ctx* ctx, uint64_t n) {
    return guarded(ctx, [&] { return cyclo::height_A(n, *ctx->cache).get_str(); });
}

char* cyclo_height_a0_json(cyclo_ctx* ctx, uint64_t n) {
    return guarded(ctx, [&] {
        const cyclo::A0Result r = cyclo::height_A0(n, *ctx->cache);
        ordered_json j;
        j["n"] = n;
        j["A0"] = r.value.get_str();
        j["witness"] = r.witness;
        return j.dump();
    });
}

char* cyclo_height_b_json(cyclo_ctx* ctx, uint64_t n, uint32_t max_tau, int prune) {
    return guarded(ctx, [&] {
        cyclo::BnOptions opts;
        opts.max_tau = max_tau;
        opts.prune = prune != 0;
        opts.threads = ctx->threads <= 0 ? 2 : ctx->threads;
        const cyclo::BnResult r = cyclo::height_B(n, opts, *ctx->cache);
        ordered_json j;
        j["n"] = n;
        j["B"] = r.b_value.get_str();
        j["witness"] = r.witness;
        j["witness_mask"] = r.witness_mask;
        j["subsets_examined"] = r.subsets_examined;
        j["pruned"] = r.pruned;
        return j.dump();
    });
}

char* cyclo_bounds_json(cyclo_ctx* ctx, uint64_t n, uint32_t max_tau) {
    return guarded(ctx, [&] {
        cyclo::CycloCache& cache = *ctx->cache;
        const cyclo::ChainBounds cb = cyclo::chain_bound(n, cache);
        const cyclo::BatemanReport bateman = cyclo::bateman_check(n, cache);
        const cyclo::BpvReport bpv = cyclo::bpv_check(n, cache);
        ordered_json j;
        j["n"] = n;
        j["tau"] = cb.tau;
        j["A_product"] = cb.a_product.get_str();
        j["A0"] = cb.a0.get_str();
        j["A0_witness"] = cb.a0_witness;
        j["bound1"] = cb.bound1.get_str();
        j["bound2"] = cb.bound2.get_str();
        j["bateman"] = {{"k", bateman.k},
                        {"A", bateman.a.get_str()},
                        {"bound", bateman.bound.get_str()},
                        {"holds", bateman.holds}};
        ordered_json bj;
        bj["k"] = bpv.k;
        bj["A"] = bpv.a.get_str();
        bj["exponent_2k1_over_k_minus_1"] = bpv.exponent_minus_one;
        bj["holds_2k1_over_k_minus_1"] = cmp_name(bpv.holds_minus_one);
        if (bpv.exponent_over_km1) {
            bj["exponent_2k1_over_km1"] = *bpv.exponent_over_km1;
            bj["holds_2k1_over_km1"] = cmp_name(*bpv.holds_over_km1);
        }
        j["bpv"] = std::move(bj);
        if (cb.tau <= max_tau && cb.tau <= 62) {
            cyclo::BnOptions opts;
            opts.max_tau = max_tau;
            opts.threads = ctx->threads <= 0 ? 2 : ctx->threads;
            const cyclo::BnResult r = cyclo::height_B(n, opts, cache);
            j["B"] = r.b_value.get_str();
            j["B_witness"] = r.witness;
            j["B_le_bound1"] = r.b_value <= cb.bound1;
            const cyclo::Theorem12Report t12 = cyclo::theorem12_check(n, 1.0, r.b_value);
            j["theorem12_psi1"] = {{"status", cmp_name(t12.status)},
                                   {"margin", static_cast<double>(t12.margin)}};
        } else {
            j["B"] = nullptr;
            j["B_note"] = "tau above cap; rerun with a higher --max-tau to enumerate B";
        }
        return j.dump();
    });
}

char* cyclo_constants_json(cyclo_ctx* ctx, double gamma, int c2_mode, double c2, uint64_t fit_x) {
    return guarded(ctx, [&] {
        const cyclo::MaierParams p = params_for(gamma, c2_mode, c2, fit_x);
        ordered_json j = params_json(p);
        if (c2_mode == 2) j["fit_x"] = fit_x;
        return j.dump();
    });
}

char* cyclo_lemma31_json(cyclo_ctx* ctx, uint64_t x, double gamma) {
    return guarded(ctx, [&] {
        const cyclo::Lemma31Result r = cyclo::lemma31_density(x, gamma);
        ordered_json j;
        j["x"] = r.x;
        j["gamma"] = r.gamma;
        j["count"] = r.count;
        j["density"] = r.density;
        j["note"] = "n = 1, 2 excluded: log log n undefined";
        return j.dump();
    });
}

char* cyclo_lemma32_json(cyclo_ctx* ctx, uint64_t x, double gamma, int c2_mode, double c2) {
    return guarded(ctx, [&] {
        const cyclo::MaierParams p = params_for(gamma, c2_mode == 0 ? 2 : c2_mode, c2, x);
        const cyclo::Lemma32Profile prof = cyclo::lemma32_profile(x, gamma, p);
        ordered_json j;
        j["x"] = prof.x;
        j["gamma"] = prof.gamma;
        j["k_limit"] = prof.k_limit;
        j["params"] = params_json(prof.params);
        ordered_json rows = ordered_json::array();
        for (const auto& r : prof.rows) {
            ordered_json e;
            e["k"] = r.k;
            e["in_lemma_range"] = r.in_lemma_range;
            e["pk_cutoff"] = r.pk_cutoff;
            e["count"] = r.count;
            e["bound"] = r.bound;
            e["ratio"] = r.ratio;
            e["omega_interval_hist"] = r.omega_interval_hist;
            rows.push_back(std::move(e));
        }
        j["rows"] = std::move(rows);
        return j.dump();
    });
}

char* cyclo_lemma33_json(cyclo_ctx* ctx, uint64_t x, double gamma, double eps, int c2_mode,
                         double c2) {
    return guarded(ctx, [&] {
        const cyclo::MaierParams params = params_for(gamma, c2_mode == 0 ? 2 : c2_mode, c2, x);
        const cyclo::Lemma33Result r = cyclo::lemma33_count(x, params, eps);
        ordered_json j;
        j["x"] = r.x;
        j["epsilon"] = r.epsilon;
        j["k0"] = r.k0;
        j["k_start"] = r.k_start;
        j["k_limit"] = r.k_limit;
        j["count"] = r.count;
        j["bound_2_eps_x"] = r.bound;
        j["holds"] = r.holds;
        j["degenerate_k0"] = r.degenerate_k0;
        j["k0_beyond_lemma_range"] = r.k0_beyond_lemma_range;
        j["params"] = params_json(params);
        return j.dump();
    });
}

char* cyclo_maier_c_json(cyclo_ctx* ctx, uint64_t x) {
    return guarded(ctx, [&] {
        const cyclo::MaierCEstimate e = cyclo::estimate_maier_C(x, *ctx->cache);
        ordered_json j;
        j["x"] = x;
        j["estimate"] = e.value;
        j["argmax"] = e.argmax;
        j["note"] = "empirical lower bound for any valid C in the key inequality";
        return j.dump();
    });
}

char* cyclo_mertens_json(cyclo_ctx* ctx, uint64_t limit, uint32_t nu_max) {
    return guarded(ctx, [&] {
        const cyclo::MertensResult r = cyclo::mertens_sum_check(limit, nu_max == 0 ? 40 : nu_max);
        ordered_json j;
        j["limit"] = r.limit;
        j["nu_max"] = r.nu_max;
        j["right_form"] = r.right_form;
        j["left_form"] = r.left_form;
        j["difference"] = r.difference;
        j["below_four"] = r.below_four;
        return j.dump();
    });
}

char* cyclo_scan_json(cyclo_ctx* ctx, uint64_t x_max, const char* psi, uint32_t b_tau,
                      const char* csv_path, const char* summary_path, const char* cache_path) {
    return guarded(ctx, [&] {
        cyclo::ScanOptions opts;
        opts.x_max = x_max;
        opts.psi = cyclo::Psi::parse(psi == nullptr ? "const:1" : psi);
        opts.b_tau = b_tau;
        opts.threads = ctx->threads;
        if (csv_path != nullptr) opts.csv_path = csv_path;
        if (summary_path != nullptr) opts.summary_path = summary_path;
        if (cache_path != nullptr) opts.cache_path = cache_path;
        const cyclo::ScanSummary sum = cyclo::scan_heights(opts, *ctx->cache);
        return sum.to_json();
    });
}

} // extern "C"
