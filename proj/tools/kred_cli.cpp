// Command-line surface for the kred shared library. Every number is
// printed exactly: integers as decimals, probabilities as "num/den".

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kred.h"

namespace {

using Entries = std::vector<std::pair<std::string, std::string>>;

struct Record {
    std::string command;
    Entries inputs;
    Entries results;
    Entries trace;  // rendered only when requested
    bool rows = false;  // results are table rows (x, inverse)
};

Entries collect(const kred_report* r) {
    Entries out;
    for (size_t i = 0; i < kred_report_size(r); ++i)
        out.emplace_back(kred_report_key(r, i), kred_report_value(r, i));
    return out;
}

void render(const Record& rec, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["command"] = rec.command;
        j["inputs"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : rec.inputs) j["inputs"][k] = v;
        j["results"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : rec.results) j["results"][k] = v;
        if (!rec.trace.empty()) {
            j["trace"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : rec.trace) j["trace"][k] = v;
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        if (rec.rows) {
            std::cout << "x,inverse\n";
            for (const auto& [k, v] : rec.results) std::cout << k << "," << v << "\n";
        } else {
            std::cout << "key,value\n";
            for (const auto& [k, v] : rec.results) std::cout << k << "," << v << "\n";
            for (const auto& [k, v] : rec.trace) std::cout << k << "," << v << "\n";
        }
    } else {
        for (const auto& [k, v] : rec.results) std::cout << k << "=" << v << "\n";
        for (const auto& [k, v] : rec.trace) std::cout << k << "=" << v << "\n";
    }
}

// Exit codes: 0 success, 1 usage error, 2 domain error.
int exit_code(int status) {
    if (status == KRED_OK) return 0;
    return status == KRED_ERR_ARGUMENT ? 1 : 2;
}

int report_failure(int status) {
    std::cerr << "error (" << kred_status_name(status) << "): " << kred_last_error() << "\n";
    return exit_code(status);
}

struct ModulusHandle {
    kred_modulus* m = nullptr;
    ~ModulusHandle() { kred_modulus_free(m); }
};

struct ReportHandle {
    kred_report* r = nullptr;
    ~ReportHandle() { kred_report_free(r); }
};

int algo_id(const std::string& name) {
    if (name == "jwa") return KRED_ALGO_JWA;
    if (name == "res") return KRED_ALGO_RES;
    return KRED_ALGO_PARES;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-ary GCD reduction toolkit"};
    app.require_subcommand(1);

    std::string k_str, x_str, y_str, u_str, v_str;
    std::string algo = "jwa", mode = "lockstep", format = "text";
    bool trace = false, report = false, scan = false, empirical = false;
    std::uint64_t seed = 20240817ULL, limit = 0, max_n = 90, bench_n = 1000;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Run one reduction");
    reduce->add_option("--k", k_str, "Modulus")->required();
    reduce->add_option("--x", x_str)->required();
    reduce->add_option("--y", y_str)->required();
    reduce->add_option("--algo", algo)->check(CLI::IsMember({"jwa", "res", "pares"}));
    reduce->add_option("--mode", mode)->check(CLI::IsMember({"lockstep", "concurrent"}));
    reduce->add_flag("--trace", trace, "Include the iteration trace");
    add_format(reduce);

    // gcd
    auto* gcd = app.add_subcommand("gcd", "k-ary gcd of U and V");
    gcd->add_option("--k", k_str, "Modulus (a power of four >= 16)")->required();
    gcd->add_option("U", u_str)->required();
    gcd->add_option("V", v_str)->required();
    gcd->add_option("--algo", algo)->check(CLI::IsMember({"jwa", "res", "pares"}));
    gcd->add_option("--mode", mode)->check(CLI::IsMember({"lockstep", "concurrent"}));
    gcd->add_flag("--report", report, "Include the full run record");
    add_format(gcd);

    // euclid
    auto* euclid = app.add_subcommand("euclid", "Euclid gcd oracle");
    euclid->add_option("U", u_str)->required();
    euclid->add_option("V", v_str)->required();
    add_format(euclid);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Enumeration harness");
    analyze->require_subcommand(1);
    auto* a_p1 = analyze->add_subcommand("p1", "Loop-avoidance lower bound");
    a_p1->add_option("--k", k_str)->required();
    a_p1->add_flag("--empirical", empirical, "Also measure the observed frequency");
    a_p1->add_option("--limit", limit, "Pair budget before sampling kicks in");
    a_p1->add_option("--seed", seed, "Sampling seed");
    add_format(a_p1);
    auto* a_l2 = analyze->add_subcommand("lemma2", "Inverse location bounds");
    a_l2->add_option("--k", k_str)->required();
    add_format(a_l2);
    auto* a_un = analyze->add_subcommand("union", "U_k against its inverse image");
    a_un->add_option("--k", k_str)->required();
    add_format(a_un);
    auto* a_wc = analyze->add_subcommand("worst", "Worst-case loop iterations");
    a_wc->add_option("--k", k_str)->required();
    a_wc->add_flag("--scan", scan, "Exhaustive scan over E_k");
    add_format(a_wc);
    auto* a_tab = analyze->add_subcommand("table-inverse", "Full inverse table over E_k");
    a_tab->add_option("--k", k_str)->required();
    add_format(a_tab);
    auto* a_fib = analyze->add_subcommand("fib-lemma", "Fibonacci log/squares properties");
    a_fib->add_option("--max", max_n, "Largest index checked");
    add_format(a_fib);

    // bench
    auto* bench = app.add_subcommand("bench", "Informational res vs pares comparison");
    bench->add_option("--k", k_str)->default_str("65536");
    bench->add_option("--n", bench_n, "Number of random pairs");
    bench->add_option("--seed", seed);
    add_format(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // any usage problem is exit 1
    }

    auto with_modulus = [&](auto fn) -> int {
        ModulusHandle m;
        int st = kred_modulus_new(k_str.c_str(), &m.m);
        if (st != KRED_OK) return report_failure(st);
        return fn(m.m);
    };

    if (reduce->parsed()) {
        return with_modulus([&](kred_modulus* m) {
            ReportHandle r;
            int md = mode == "concurrent" ? KRED_MODE_CONCURRENT : KRED_MODE_LOCKSTEP;
            int st = kred_reduce(m, x_str.c_str(), y_str.c_str(), algo_id(algo), md, &r.r);
            if (st != KRED_OK) return report_failure(st);
            Record rec;
            rec.command = "reduce";
            rec.inputs = {{"k", k_str}, {"x", x_str}, {"y", y_str}, {"algo", algo}, {"mode", mode}};
            for (const auto& e : collect(r.r)) {
                bool detail = e.first == "path" || e.first == "quotients";
                if (!detail)
                    rec.results.push_back(e);
                else if (trace)
                    rec.trace.push_back(e);
            }
            render(rec, format);
            return 0;
        });
    }

    if (gcd->parsed()) {
        if (algo.empty()) algo = "pares";
        return with_modulus([&](kred_modulus* m) {
            ReportHandle r;
            int md = mode == "concurrent" ? KRED_MODE_CONCURRENT : KRED_MODE_LOCKSTEP;
            int st = kred_gcd(m, u_str.c_str(), v_str.c_str(), algo_id(algo), md, &r.r);
            if (st != KRED_OK) return report_failure(st);
            Record rec;
            rec.command = "gcd";
            rec.inputs = {{"k", k_str}, {"u", u_str}, {"v", v_str}, {"algo", algo}};
            for (const auto& e : collect(r.r))
                if (report || e.first == "gcd") rec.results.push_back(e);
            render(rec, format);
            return 0;
        });
    }

    if (euclid->parsed()) {
        ReportHandle r;
        int st = kred_euclid_gcd(u_str.c_str(), v_str.c_str(), &r.r);
        if (st != KRED_OK) return report_failure(st);
        Record rec;
        rec.command = "euclid";
        rec.inputs = {{"u", u_str}, {"v", v_str}};
        rec.results = collect(r.r);
        render(rec, format);
        return 0;
    }

    if (analyze->parsed()) {
        auto run_analysis = [&](const std::string& name, auto call, bool rows = false) -> int {
            return with_modulus([&](kred_modulus* m) {
                ReportHandle r;
                int st = call(m, &r.r);
                if (st != KRED_OK) return report_failure(st);
                Record rec;
                rec.command = "analyze " + name;
                rec.inputs = {{"k", k_str}};
                rec.results = collect(r.r);
                rec.rows = rows;
                render(rec, format);
                return 0;
            });
        };
        if (a_p1->parsed())
            return run_analysis("p1", [&](kred_modulus* m, kred_report** out) {
                return kred_analyze_p1(m, empirical ? 1 : 0, limit, seed, out);
            });
        if (a_l2->parsed()) return run_analysis("lemma2", kred_analyze_lemma2);
        if (a_un->parsed()) return run_analysis("union", kred_analyze_union);
        if (a_wc->parsed())
            return run_analysis("worst", [&](kred_modulus* m, kred_report** out) {
                return kred_analyze_worst(m, scan ? 1 : 0, out);
            });
        if (a_tab->parsed())
            return run_analysis("table-inverse", kred_analyze_inverse_table, true);
        if (a_fib->parsed()) {
            ReportHandle r;
            int st = kred_analyze_fib_lemma(max_n, &r.r);
            if (st != KRED_OK) return report_failure(st);
            Record rec;
            rec.command = "analyze fib-lemma";
            rec.inputs = {{"max", std::to_string(max_n)}};
            rec.results = collect(r.r);
            render(rec, format);
            return 0;
        }
    }

    if (bench->parsed()) {
        if (k_str.empty()) k_str = "65536";
        return with_modulus([&](kred_modulus* m) {
            std::mt19937_64 rng(seed);
            auto run_side = [&](int algo_code, double& seconds, std::uint64_t& iterations,
                               std::uint64_t& avoided) -> int {
                std::mt19937_64 local(seed);
                auto start = std::chrono::steady_clock::now();
                for (std::uint64_t i = 0; i < bench_n; ++i) {
                    // odd 63-bit operands: coprime to any power-of-two modulus
                    std::string x = std::to_string((local() >> 1) | 1);
                    std::string y = std::to_string((local() >> 1) | 1);
                    ReportHandle r;
                    int st = kred_reduce(m, x.c_str(), y.c_str(), algo_code,
                                         KRED_MODE_LOCKSTEP, &r.r);
                    if (st != KRED_OK) return st;
                    iterations += std::stoull(kred_report_get(r.r, "iterations"));
                    if (std::string(kred_report_get(r.r, "loop_avoided")) == "true") ++avoided;
                }
                seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                              .count();
                return KRED_OK;
            };
            double t_res = 0, t_pares = 0;
            std::uint64_t it_res = 0, it_pares = 0, av_res = 0, av_pares = 0;
            int st = run_side(KRED_ALGO_RES, t_res, it_res, av_res);
            if (st == KRED_OK) st = run_side(KRED_ALGO_PARES, t_pares, it_pares, av_pares);
            if (st != KRED_OK) return report_failure(st);
            Record rec;
            rec.command = "bench";
            rec.inputs = {{"k", k_str}, {"n", std::to_string(bench_n)},
                          {"seed", std::to_string(seed)}};
            rec.results = {{"res_iterations", std::to_string(it_res)},
                           {"res_avoided", std::to_string(av_res)},
                           {"res_seconds", std::to_string(t_res)},
                           {"pares_iterations", std::to_string(it_pares)},
                           {"pares_avoided", std::to_string(av_pares)},
                           {"pares_seconds", std::to_string(t_pares)}};
            render(rec, format);
            return 0;
        });
    }

    return 0;
}
