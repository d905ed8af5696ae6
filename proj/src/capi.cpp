#include "kred.h"

#include <cstring>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kred/analysis.hpp"
#include "kred/kary_gcd.hpp"
#include "kred/reduction.hpp"

struct kred_modulus {
    kred::Modulus m;
};

struct kred_report {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(std::string key, std::string value) {
        entries.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string key, const mpz_class& v) { add(std::move(key), v.get_str()); }
    void add(std::string key, const mpq_class& v) { add(std::move(key), v.get_str()); }
    void add(std::string key, std::size_t v) { add(std::move(key), std::to_string(v)); }
    void add(std::string key, bool v) { add(std::move(key), std::string(v ? "true" : "false")); }
};

namespace {

thread_local std::string g_last_error;

int fail(int status, const char* what) {
    g_last_error = what;
    return status;
}

kred::Natural parse_natural(const char* s) {
    if (s == nullptr || *s == '\0') throw kred::ArgumentError("empty integer string");
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw kred::ArgumentError("malformed decimal integer");
    if (sgn(v) < 0) throw kred::ArgumentError("negative value where a natural is required");
    return v;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return KRED_OK;
    } catch (const kred::NotCoprimeError& e) {
        return fail(KRED_ERR_NOT_COPRIME, e.what());
    } catch (const kred::NotSquareError& e) {
        return fail(KRED_ERR_NOT_SQUARE, e.what());
    } catch (const kred::InvalidModulusError& e) {
        return fail(KRED_ERR_INVALID_MODULUS, e.what());
    } catch (const kred::InvalidRegionError& e) {
        return fail(KRED_ERR_INVALID_REGION, e.what());
    } catch (const kred::ArgumentError& e) {
        return fail(KRED_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(KRED_ERR_INTERNAL, e.what());
    }
}

std::string join(const std::vector<kred::Natural>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out;
}

void add_trace(kred_report& r, const kred::ReductionTrace& t) {
    r.add("iterations", t.iterations);
    r.add("loop_avoided", t.loop_avoided);
    r.add("path", std::string(kred::path_name(t.path)));
    r.add("quotients", join(t.quotients));
}

}  // namespace

extern "C" {

const char* kred_status_name(int status) {
    switch (status) {
        case KRED_OK: return "ok";
        case KRED_ERR_ARGUMENT: return "argument-error";
        case KRED_ERR_NOT_COPRIME: return "not-coprime";
        case KRED_ERR_NOT_SQUARE: return "not-square";
        case KRED_ERR_INVALID_MODULUS: return "invalid-modulus";
        case KRED_ERR_INVALID_REGION: return "invalid-region";
        case KRED_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* kred_last_error(void) { return g_last_error.c_str(); }

int kred_modulus_new(const char* k_decimal, kred_modulus** out) {
    return guarded([&] {
        auto m = new kred_modulus{kred::Modulus(parse_natural(k_decimal))};
        *out = m;
    });
}

void kred_modulus_free(kred_modulus* m) { delete m; }

int kred_reduce(const kred_modulus* m, const char* x, const char* y, int algo, int mode,
                kred_report** out) {
    return guarded([&] {
        kred::Natural xn = parse_natural(x), yn = parse_natural(y);
        kred::RaceMode rm =
            mode == KRED_MODE_CONCURRENT ? kred::RaceMode::Concurrent : kred::RaceMode::Lockstep;
        kred::Reduction red;
        switch (algo) {
            case KRED_ALGO_JWA: red = kred::jwa(xn, yn, m->m); break;
            case KRED_ALGO_RES: red = kred::res(xn, yn, m->m); break;
            case KRED_ALGO_RES_SWAPPED: red = kred::res_swapped(xn, yn, m->m); break;
            case KRED_ALGO_PARES: red = kred::pares(xn, yn, m->m, rm); break;
            default: throw kred::ArgumentError("unknown reduction algorithm");
        }
        auto r = new kred_report;
        r->add("n", red.pair.n);
        r->add("d", red.pair.d);
        add_trace(*r, red.trace);
        *out = r;
    });
}

int kred_gcd(const kred_modulus* m, const char* u, const char* v, int algo, int mode,
             kred_report** out) {
    return guarded([&] {
        kred::Algo a;
        switch (algo) {
            case KRED_ALGO_JWA: a = kred::Algo::Jwa; break;
            case KRED_ALGO_RES: a = kred::Algo::Res; break;
            case KRED_ALGO_PARES: a = kred::Algo::Pares; break;
            default: throw kred::ArgumentError("unknown gcd algorithm");
        }
        kred::RaceMode rm =
            mode == KRED_MODE_CONCURRENT ? kred::RaceMode::Concurrent : kred::RaceMode::Lockstep;
        kred::GcdReport rep =
            kred::kary_gcd(parse_natural(u), parse_natural(v), m->m, a, rm);
        auto r = new kred_report;
        r->add("gcd", rep.result);
        r->add("steps", rep.steps);
        r->add("two_exponent", rep.two_exponent);
        r->add("spurious_removed", rep.spurious_removed);
        std::size_t total = 0;
        for (const auto& t : rep.reduction_traces) total += t.iterations;
        r->add("total_loop_iterations", total);
        *out = r;
    });
}

int kred_euclid_gcd(const char* u, const char* v, kred_report** out) {
    return guarded([&] {
        auto r = new kred_report;
        r->add("gcd", kred::euclid_gcd(parse_natural(u), parse_natural(v)));
        *out = r;
    });
}

int kred_analyze_p1(const kred_modulus* m, int empirical, uint64_t sample_limit, uint64_t seed,
                    kred_report** out) {
    return guarded([&] {
        kred::P1Result p = kred::p1(m->m);
        auto r = new kred_report;
        r->add("k", m->m.k());
        r->add("phi_k", p.phi_k);
        r->add("r", p.r);
        r->add("p1_exact", p.exact);
        if (p.closed_form) r->add("p1_closed_form", *p.closed_form);
        if (empirical) {
            std::size_t limit = sample_limit ? static_cast<std::size_t>(sample_limit) : 1u << 20;
            kred::AvoidanceResult av = kred::empirical_avoidance(m->m, limit, seed);
            r->add("empirical_avoidance", av.frequency);
            r->add("empirical_exhaustive", av.exhaustive);
            r->add("empirical_trials", av.trials);
        }
        *out = r;
    });
}

int kred_analyze_lemma2(const kred_modulus* m, kred_report** out) {
    return guarded([&] {
        auto violations = kred::check_lemma2(m->m);
        auto r = new kred_report;
        r->add("k", m->m.k());
        r->add("violations", violations.size());
        for (const auto& v : violations) r->add("violation." + v.x.get_str(), v.inverse);
        *out = r;
    });
}

int kred_analyze_union(const kred_modulus* m, kred_report** out) {
    return guarded([&] {
        kred::UnionStats st = kred::union_stats(m->m);
        auto r = new kred_report;
        r->add("k", m->m.k());
        r->add("size_Uk", st.size_Uk);
        r->add("union_size", st.union_size);
        r->add("intersection", join(st.intersection));
        r->add("union", join(st.union_set));
        *out = r;
    });
}

int kred_analyze_worst(const kred_modulus* m, int scan, kred_report** out) {
    return guarded([&] {
        auto r = new kred_report;
        r->add("k", m->m.k());
        if (scan) {
            kred::WorstCase wc = kred::worst_case_scan(m->m);
            r->add("max_iterations", wc.max_iterations);
            r->add("argmax_c", wc.argmax_c);
            r->add("predicted", wc.predicted);
        } else {
            r->add("predicted", kred::floor_log_phi(m->m.k()) / 2);
        }
        *out = r;
    });
}

int kred_analyze_inverse_table(const kred_modulus* m, kred_report** out) {
    return guarded([&] {
        auto r = new kred_report;
        for (const auto& [x, inv] : kred::inverse_table(m->m)) r->add(x.get_str(), inv);
        *out = r;
    });
}

int kred_analyze_fib_lemma(uint64_t max_n, kred_report** out) {
    return guarded([&] {
        kred::FibLemmaCheck c = kred::check_fib_lemma(static_cast<unsigned long>(max_n));
        auto r = new kred_report;
        r->add("max", static_cast<std::size_t>(c.max_n));
        r->add("violations", c.violations);
        r->add("ok", c.violations == 0);
        *out = r;
    });
}

size_t kred_report_size(const kred_report* r) { return r->entries.size(); }

const char* kred_report_key(const kred_report* r, size_t i) {
    return i < r->entries.size() ? r->entries[i].first.c_str() : nullptr;
}

const char* kred_report_value(const kred_report* r, size_t i) {
    return i < r->entries.size() ? r->entries[i].second.c_str() : nullptr;
}

const char* kred_report_get(const kred_report* r, const char* key) {
    for (const auto& [k, v] : r->entries)
        if (k == key) return v.c_str();
    return nullptr;
}

void kred_report_free(kred_report* r) { delete r; }

}  // extern "C"
