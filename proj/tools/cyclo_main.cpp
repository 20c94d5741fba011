// cyclo: command-line front end. Talks to the library exclusively through the
// C API in cyclo/capi.h; structured results come back as JSON strings that
// are either printed raw (--format json) or rendered as small tables.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclo/capi.h"

using nlohmann::json;

namespace {

// Exit codes, also documented in the README:
//   0 success, 2 usage, 3 bad value, 4 budget, 5 I/O, 6 internal, 7 resource
int status_to_exit(cyclo_status s) {
    switch (s) {
        case CYCLO_OK: return 0;
        case CYCLO_ERR_DOMAIN:
        case CYCLO_ERR_CONFIG:
        case CYCLO_ERR_CONTRACT: return 3;
        case CYCLO_ERR_BUDGET: return 4;
        case CYCLO_ERR_IO: return 5;
        case CYCLO_ERR_RESOURCE: return 7;
        case CYCLO_ERR_INTEGRITY:
        case CYCLO_ERR_INTERNAL: return 6;
    }
    return 6;
}

struct CtxDeleter {
    void operator()(cyclo_ctx* c) const { cyclo_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<cyclo_ctx, CtxDeleter>;

struct StrDeleter {
    void operator()(char* s) const { cyclo_str_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

std::string join_u64(const json& arr, const char* sep = ", ") {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += std::to_string(v.get<std::uint64_t>());
    }
    return out;
}

void print_phi(const json& j) {
    std::printf("Phi_%llu(x) = %s\n", static_cast<unsigned long long>(j["n"].get<std::uint64_t>()),
                j["text"].get<std::string>().c_str());
    std::printf("degree   %lld\n", static_cast<long long>(j["degree"].get<std::int64_t>()));
    std::printf("height   %s\n", j["height"].get<std::string>().c_str());
    std::string coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!coeffs.empty()) coeffs += ", ";
        coeffs += c.get<std::string>();
    }
    std::printf("coeffs   [%s]  (ascending)\n", coeffs.c_str());
}

void print_b(const json& j) {
    std::printf("B(%llu) = %s\n", static_cast<unsigned long long>(j["n"].get<std::uint64_t>()),
                j["B"].get<std::string>().c_str());
    std::printf("witness divisors  {%s}\n", join_u64(j["witness"]).c_str());
    std::printf("subsets examined  %llu\n",
                static_cast<unsigned long long>(j["subsets_examined"].get<std::uint64_t>()));
    std::printf("subsets pruned    %llu\n",
                static_cast<unsigned long long>(j["pruned"].get<std::uint64_t>()));
}

void print_bounds(const json& j) {
    std::printf("n = %llu, tau = %llu\n",
                static_cast<unsigned long long>(j["n"].get<std::uint64_t>()),
                static_cast<unsigned long long>(j["tau"].get<std::uint64_t>()));
    std::printf("prod A(d)          %s\n", j["A_product"].get<std::string>().c_str());
    std::printf("A0 (witness %llu)  %s\n",
                static_cast<unsigned long long>(j["A0_witness"].get<std::uint64_t>()),
                j["A0"].get<std::string>().c_str());
    std::printf("bound1 = n^tau * prod A(d)   %s\n", j["bound1"].get<std::string>().c_str());
    std::printf("bound2 = n^tau * A0^tau      %s\n", j["bound2"].get<std::string>().c_str());
    if (j["B"].is_string()) {
        std::printf("B(n)                         %s  (<= bound1: %s)\n",
                    j["B"].get<std::string>().c_str(),
                    j["B_le_bound1"].get<bool>() ? "yes" : "NO");
        std::printf("theorem 1.2 at psi=1         %s\n",
                    j["theorem12_psi1"]["status"].get<std::string>().c_str());
    } else {
        std::printf("B(n)                         skipped: %s\n",
                    j["B_note"].get<std::string>().c_str());
    }
    const auto& bat = j["bateman"];
    std::printf("Bateman A(n) <= n^(2^(k-1)): %s  (k = %u, A = %s)\n",
                bat["holds"].get<bool>() ? "holds" : "VIOLATED", bat["k"].get<unsigned>(),
                bat["A"].get<std::string>().c_str());
    const auto& bpv = j["bpv"];
    std::printf("BPV exponent 2^(k-1)/k - 1   = %.6f: %s\n",
                bpv["exponent_2k1_over_k_minus_1"].get<double>(),
                bpv["holds_2k1_over_k_minus_1"].get<std::string>().c_str());
    if (bpv.contains("exponent_2k1_over_km1"))
        std::printf("BPV exponent 2^(k-1)/(k-1)   = %.6f: %s\n",
                    bpv["exponent_2k1_over_km1"].get<double>(),
                    bpv["holds_2k1_over_km1"].get<std::string>().c_str());
}

void print_constants(const json& j) {
    std::printf("gamma     %.6f\n", j["gamma"].get<double>());
    std::printf("b         %.6f\n", j["b"].get<double>());
    std::printf("epsilon   %.6f\n", j["epsilon"].get<double>());
    std::printf("c0        %.9f\n", j["c0"].get<double>());
    std::printf("residual  %.3e  (feasible iff <= 0)\n", j["constraint_residual"].get<double>());
    if (j.contains("C2"))
        std::printf("C2        %.6f  (%s)\n", j["C2"].get<double>(),
                    j["C2_mode"].get<std::string>().c_str());
    if (j.contains("k0")) std::printf("k0        %.3f\n", j["k0"].get<double>());
}

void print_lemma32(const json& j) {
    std::printf("x = %llu, gamma = %.4f, valid k < %.4f\n",
                static_cast<unsigned long long>(j["x"].get<std::uint64_t>()),
                j["gamma"].get<double>(), j["k_limit"].get<double>());
    print_constants(j["params"]);
    std::printf("%4s %10s %14s %16s %10s  %s\n", "k", "p_k >", "count", "C2*x*e^(-c0 k)", "ratio",
                "in range");
    for (const auto& r : j["rows"]) {
        std::printf("%4u %10llu %14llu %16.1f %10.6f  %s\n", r["k"].get<unsigned>(),
                    static_cast<unsigned long long>(r["pk_cutoff"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(r["count"].get<std::uint64_t>()),
                    r["bound"].get<double>(), r["ratio"].get<double>(),
                    r["in_lemma_range"].get<bool>() ? "yes" : "no");
    }
}

void print_scan_summary(const json& j) {
    std::printf("scanned n = 2..%llu  (%llu rows), psi = %s\n",
                static_cast<unsigned long long>(j["x_max"].get<std::uint64_t>()),
                static_cast<unsigned long long>(j["rows"].get<std::uint64_t>()),
                j["psi"].get<std::string>().c_str());
    const auto& p = j["prop21"];
    std::printf("Prop 2.1 exceptions (A0 > n^psi): %llu  (density %.3e)\n",
                static_cast<unsigned long long>(p["exceptions"].get<std::uint64_t>()),
                p["exception_density"].get<double>());
    const auto& t = j["theorem12"];
    std::printf("B computed for %llu rows; Theorem 1.2 exceptions: %llu\n",
                static_cast<unsigned long long>(t["b_computed"].get<std::uint64_t>()),
                static_cast<unsigned long long>(t["exceptions"].get<std::uint64_t>()));
    std::printf("per decade:\n");
    for (const auto& d : j["decades"]) {
        std::printf("  [%llu, %llu]: rows %llu, prop21 exceptions %llu, thm12 exceptions %llu\n",
                    static_cast<unsigned long long>(d["lo"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(d["hi"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(d["rows"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(d["prop21_exceptions"].get<std::uint64_t>()),
                    static_cast<unsigned long long>(d["theorem12_exceptions"].get<std::uint64_t>()));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclo: heights of cyclotomic polynomials and of divisors of x^n - 1"};
    app.require_subcommand(1);

    int threads = 0;
    std::string format = "human";
    std::uint64_t poly_retention = 4096;
    std::string cache_path;
    app.add_option("--threads", threads, "worker threads (0 = all hardware threads)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--poly-retention", poly_retention,
                   "retain Phi_m polynomials in memory only for m up to this bound");
    app.add_option("--cache", cache_path, "JSON-lines result cache (scan only)")
        ->envname("CYCLO_CACHE");

    std::uint64_t n = 0;
    std::uint64_t x = 0;
    std::uint64_t limit = 0;
    std::uint32_t max_tau = 20;
    std::uint32_t b_tau = 0;
    std::uint32_t nu_max = 40;
    bool prune = false;
    bool fit = false;
    double gamma = 2.5;
    double eps = 0.01;
    double c2 = 0;
    std::string psi = "const:1";
    std::string csv_out = "scan.csv";
    std::string summary_out = "scan_summary.json";

    CLI::App* cmd_phi = app.add_subcommand("phi", "print Phi_n");
    cmd_phi->add_option("n", n, "index")->required();

    CLI::App* cmd_a = app.add_subcommand("A", "print A(n) = H(Phi_n)");
    cmd_a->add_option("n", n, "index")->required();

    CLI::App* cmd_a0 = app.add_subcommand("A0", "print A0(n) = max A(d) over d | n");
    cmd_a0->add_option("n", n, "index")->required();

    CLI::App* cmd_b = app.add_subcommand("B", "exact B(n) by subset enumeration");
    cmd_b->add_option("n", n, "index")->required();
    cmd_b->add_option("--max-tau", max_tau, "enumeration budget: require tau(n) <= this");
    cmd_b->add_flag("--prune", prune, "prune subtrees via the product-height bound");

    CLI::App* cmd_bound = app.add_subcommand("bound", "product bounds, Bateman and BPV checks");
    cmd_bound->add_option("n", n, "index")->required();
    cmd_bound->add_option("--max-tau", max_tau, "compute exact B(n) when tau(n) <= this");

    CLI::App* cmd_scan = app.add_subcommand("scan", "per-n height records and density summary");
    cmd_scan->add_option("--max", x, "scan n = 2..max")->required();
    cmd_scan->add_option("--psi", psi, "psi function: const:C, loglog, logloglog, sqrt_loglog");
    cmd_scan->add_option("--B-tau", b_tau, "compute B(n) when tau(n) <= this (0 = never)");
    cmd_scan->add_option("--out", csv_out, "CSV output path");
    cmd_scan->add_option("--summary", summary_out, "JSON summary output path");

    CLI::App* cmd_l31 = app.add_subcommand("lemma31", "density of {n : omega(n) >= loglog n / log gamma}");
    cmd_l31->add_option("--max", x, "count n <= max")->required();
    cmd_l31->add_option("--gamma", gamma, "gamma in (2, e)")->required();

    CLI::App* cmd_l32 = app.add_subcommand("lemma32", "exceedance counts vs C2 x e^(-c0 k)");
    cmd_l32->add_option("--max", x, "count n <= max")->required();
    cmd_l32->add_option("--gamma", gamma, "gamma in (2, e)")->required();
    CLI::Option* l32_c2 = cmd_l32->add_option("--C2", c2, "explicit C2");
    cmd_l32->add_flag("--fit", fit, "fit C2 empirically at x (default when --C2 absent)");
    l32_c2->excludes("--fit");

    CLI::App* cmd_l33 = app.add_subcommand("lemma33", "tail count for k >= k0 vs 2 eps x");
    cmd_l33->add_option("--max", x, "count n <= max")->required();
    cmd_l33->add_option("--gamma", gamma, "gamma in (2, e)")->required();
    cmd_l33->add_option("--eps", eps, "epsilon > 0")->required();
    cmd_l33->add_option("--C2", c2, "explicit C2 (default: empirical fit at x)");

    CLI::App* cmd_mc = app.add_subcommand("maier-C", "empirical estimate of the key-inequality constant");
    cmd_mc->add_option("--max", x, "squarefree n <= max")->required();

    CLI::App* cmd_mertens = app.add_subcommand("mertens", "the two prime sums behind the B-constant");
    cmd_mertens->add_option("--limit", limit, "primes p <= limit")->required();
    cmd_mertens->add_option("--nu-max", nu_max, "truncation of the left-form inner sum");

    CLI::App* cmd_const = app.add_subcommand("constants", "grid-searched (b, eps, c0) and C2/k0");
    cmd_const->add_option("--gamma", gamma, "gamma in (2, e)")->required();
    CLI::Option* c_c2 = cmd_const->add_option("--C2", c2, "explicit C2");
    CLI::Option* c_fx = cmd_const->add_option("--fit-x", x, "fit C2 empirically at this x");
    c_c2->excludes(c_fx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ConversionError& e) {
        app.exit(e);
        return 3;
    } catch (const CLI::ValidationError& e) {
        app.exit(e);
        return 3;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CtxPtr ctx(cyclo_ctx_new());
    if (!ctx) {
        std::fprintf(stderr, "error: out of memory\n");
        return 6;
    }
    cyclo_ctx_set_threads(ctx.get(), threads);
    cyclo_ctx_set_poly_retention(ctx.get(), poly_retention);

    StrPtr out;
    if (cmd_phi->parsed()) {
        out.reset(cyclo_phi_json(ctx.get(), n));
    } else if (cmd_a->parsed()) {
        out.reset(cyclo_height_a(ctx.get(), n));
    } else if (cmd_a0->parsed()) {
        out.reset(cyclo_height_a0_json(ctx.get(), n));
    } else if (cmd_b->parsed()) {
        out.reset(cyclo_height_b_json(ctx.get(), n, max_tau, prune ? 1 : 0));
    } else if (cmd_bound->parsed()) {
        out.reset(cyclo_bounds_json(ctx.get(), n, max_tau));
    } else if (cmd_scan->parsed()) {
        out.reset(cyclo_scan_json(ctx.get(), x, psi.c_str(), b_tau, csv_out.c_str(),
                                  summary_out.c_str(), cache_path.c_str()));
    } else if (cmd_l31->parsed()) {
        out.reset(cyclo_lemma31_json(ctx.get(), x, gamma));
    } else if (cmd_l32->parsed()) {
        const int mode = l32_c2->count() > 0 ? 1 : 2;
        out.reset(cyclo_lemma32_json(ctx.get(), x, gamma, mode, c2));
    } else if (cmd_l33->parsed()) {
        const int mode = cmd_l33->count("--C2") > 0 ? 1 : 2;
        out.reset(cyclo_lemma33_json(ctx.get(), x, gamma, eps, mode, c2));
    } else if (cmd_mc->parsed()) {
        out.reset(cyclo_maier_c_json(ctx.get(), x));
    } else if (cmd_mertens->parsed()) {
        out.reset(cyclo_mertens_json(ctx.get(), limit, nu_max));
    } else if (cmd_const->parsed()) {
        int mode = 0;
        if (c_c2->count() > 0) mode = 1;
        if (c_fx->count() > 0) mode = 2;
        out.reset(cyclo_constants_json(ctx.get(), gamma, mode, c2, x));
    }

    if (!out) {
        std::fprintf(stderr, "error: %s\n", cyclo_ctx_error(ctx.get()));
        return status_to_exit(cyclo_ctx_status(ctx.get()));
    }

    if (format == "json") {
        std::printf("%s\n", out.get());
        return 0;
    }

    // Human rendering. A(n) comes back as a bare decimal string.
    if (cmd_a->parsed()) {
        std::printf("A(%llu) = %s\n", static_cast<unsigned long long>(n), out.get());
        return 0;
    }
    const json j = json::parse(out.get());
    if (cmd_phi->parsed()) {
        print_phi(j);
    } else if (cmd_a0->parsed()) {
        std::printf("A0(%llu) = %s  (witness divisor %llu)\n", static_cast<unsigned long long>(n),
                    j["A0"].get<std::string>().c_str(),
                    static_cast<unsigned long long>(j["witness"].get<std::uint64_t>()));
    } else if (cmd_b->parsed()) {
        print_b(j);
    } else if (cmd_bound->parsed()) {
        print_bounds(j);
    } else if (cmd_scan->parsed()) {
        print_scan_summary(j);
        std::printf("CSV written to %s\n", csv_out.c_str());
        std::printf("summary written to %s\n", summary_out.c_str());
    } else if (cmd_l31->parsed()) {
        std::printf("#{3 <= n <= %llu : omega(n) >= loglog n / log %.4f} = %llu  (density %.6f)\n",
                    static_cast<unsigned long long>(x), gamma,
                    static_cast<unsigned long long>(j["count"].get<std::uint64_t>()),
                    j["density"].get<double>());
    } else if (cmd_l32->parsed()) {
        print_lemma32(j);
    } else if (cmd_l33->parsed()) {
        std::printf("k0 = %.3f (start k = %u, lemma range k < %.3f)\n", j["k0"].get<double>(),
                    j["k_start"].get<unsigned>(), j["k_limit"].get<double>());
        std::printf("count = %llu vs 2 eps x = %.1f: %s\n",
                    static_cast<unsigned long long>(j["count"].get<std::uint64_t>()),
                    j["bound_2_eps_x"].get<double>(),
                    j["holds"].get<bool>() ? "holds" : "VIOLATED");
        if (j["degenerate_k0"].get<bool>()) std::printf("note: k0 < 1 (degenerate configuration)\n");
        if (j["k0_beyond_lemma_range"].get<bool>())
            std::printf("note: k0 exceeds the valid k range at this x\n");
    } else if (cmd_mc->parsed()) {
        std::printf("max over squarefree n <= %llu of log A(n) / sum 2^k log p_k = %.6f",
                    static_cast<unsigned long long>(x), j["estimate"].get<double>());
        const auto argmax = j["argmax"].get<std::uint64_t>();
        if (argmax != 0)
            std::printf("  (attained at n = %llu)\n", static_cast<unsigned long long>(argmax));
        else
            std::printf("  (every A(n) = 1 in range)\n");
    } else if (cmd_mertens->parsed()) {
        std::printf("2 sum log p / (p(p-1)) over p <= %llu = %.9f  (< 4: %s)\n",
                    static_cast<unsigned long long>(limit), j["right_form"].get<double>(),
                    j["below_four"].get<bool>() ? "yes" : "NO");
        std::printf("sum (2/p^2 + 3/p^3 + ...) log p (nu <= %u) = %.9f\n", nu_max,
                    j["left_form"].get<double>());
        std::printf("difference (left - right) = %.9f\n", j["difference"].get<double>());
    } else if (cmd_const->parsed()) {
        print_constants(j);
    }
    return 0;
}
