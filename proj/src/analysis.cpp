#include "kred/analysis.hpp"

#include <algorithm>
#include <cstdint>

namespace kred {
namespace {

void require_square(const Modulus& m) {
    if (!m.perfect_square() || m.k() < 9)
        throw NotSquareError("operation requires a perfect-square modulus k >= 9");
}

Natural gcd_nat(const Natural& a, const Natural& b) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

std::vector<Natural> enumerate_Ek(const Modulus& m) {
    std::vector<Natural> out;
    for (Natural x = 1; x <= m.k(); ++x)
        if (gcd_nat(x, m.k()) == 1) out.push_back(x);
    return out;
}

std::vector<Lemma2Violation> check_lemma2(const Modulus& m) {
    std::vector<Lemma2Violation> out;
    for (Natural x = 2; x * x < m.k(); ++x) {
        if (gcd_nat(x, m.k()) != 1) continue;
        Natural y = mod_inv(x, m);
        // sqrt(k) < y < k - sqrt(k), as integer comparisons.
        Natural w = m.k() - y;
        if (y * y <= m.k() || w * w <= m.k()) out.push_back({x, std::move(y)});
    }
    return out;
}

UnionStats union_stats(const Modulus& m) {
    require_square(m);
    UnionStats st;
    std::vector<Natural> uk, lambda_uk;
    for (const Natural& x : enumerate_Ek(m)) {
        if (in_U(x, m)) {
            uk.push_back(x);
            lambda_uk.push_back(mod_inv(x, m));
        }
    }
    st.size_Uk = uk.size();
    std::sort(lambda_uk.begin(), lambda_uk.end());
    std::set_intersection(uk.begin(), uk.end(), lambda_uk.begin(), lambda_uk.end(),
                          std::back_inserter(st.intersection));
    std::set_union(uk.begin(), uk.end(), lambda_uk.begin(), lambda_uk.end(),
                   std::back_inserter(st.union_set));
    st.union_size = st.union_set.size();
    return st;
}

P1Result p1(const Modulus& m) {
    require_square(m);
    P1Result out;
    out.phi_k = totient(m.k());
    Natural phi_root = totient(m.root());
    out.exact = Rational(4 * phi_root - 2, out.phi_k);
    out.exact.canonicalize();

    // Cross-validate the formula against direct enumeration at desk scale.
    if (m.k() <= 65536) {
        UnionStats st = union_stats(m);
        out.r = st.union_size;
        Rational enumerated(static_cast<unsigned long>(st.union_size), out.phi_k);
        enumerated.canonicalize();
        if (enumerated != out.exact)
            throw Error("internal: p1 formula disagrees with enumeration");
    } else {
        out.r = static_cast<std::size_t>(Natural(4 * phi_root - 2).get_ui());
    }

    if (m.power_of_four()) {
        unsigned long l = mpz_scan1(m.k().get_mpz_t(), 0) / 2;
        if (l >= 2) {
            Rational cf = Rational(1, Natural(1) << (l - 2)) - Rational(1, Natural(1) << (2 * l - 2));
            cf.canonicalize();
            out.closed_form = cf;
        }
    }
    return out;
}

AvoidanceResult empirical_avoidance(const Modulus& m, std::size_t exhaustive_limit,
                                    unsigned long seed) {
    require_square(m);
    std::vector<Natural> ek = enumerate_Ek(m);
    AvoidanceResult out;
    std::size_t avoided = 0;
    if (ek.size() * ek.size() <= exhaustive_limit) {
        for (const Natural& x : ek)
            for (const Natural& y : ek)
                if (pares(x, y, m, RaceMode::Lockstep).trace.loop_avoided) ++avoided;
        out.trials = ek.size() * ek.size();
        out.exhaustive = true;
    } else {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(seed);
        out.trials = exhaustive_limit;
        out.exhaustive = false;
        for (std::size_t i = 0; i < out.trials; ++i) {
            const Natural& x = ek[mpz_class(rng.get_z_range(ek.size())).get_ui()];
            const Natural& y = ek[mpz_class(rng.get_z_range(ek.size())).get_ui()];
            if (pares(x, y, m, RaceMode::Lockstep).trace.loop_avoided) ++avoided;
        }
    }
    out.frequency = Rational(static_cast<unsigned long>(avoided),
                             static_cast<unsigned long>(out.trials));
    out.frequency.canonicalize();
    return out;
}

namespace {

// Word-sized scan of the truncated-Euclid iteration count over E_k.
// Coprimality is only checked lazily, when a candidate beats the
// current maximum.
WorstCase worst_scan_u64(std::uint64_t k, std::uint64_t exit_bound, std::size_t predicted) {
    WorstCase out;
    out.predicted = predicted;
    out.max_iterations = 0;
    out.argmax_c = 1;  // c = 1 exits immediately and is always coprime
    for (std::uint64_t c = 2; c < k; ++c) {
        std::uint64_t n1 = k, n2 = c;
        std::size_t t = 0;
        while (n2 >= exit_bound) {
            std::uint64_t r = n1 - n2;
            if (r >= n2) {
                r -= n2;
                if (r >= n2) r = n1 % n2;
            }
            n1 = n2;
            n2 = r;
            ++t;
        }
        if (t > out.max_iterations) {
            std::uint64_t a = c, b = k;
            while (b) {
                std::uint64_t tmp = a % b;
                a = b;
                b = tmp;
            }
            if (a == 1) {
                out.max_iterations = t;
                out.argmax_c = static_cast<unsigned long>(c);
            }
        }
    }
    return out;
}

}  // namespace

WorstCase worst_case_scan(const Modulus& m) {
    if (m.k() <= 2) throw ArgumentError("worst_case_scan requires k > 2");
    std::size_t predicted = floor_log_phi(m.k()) / 2;
    if (m.k().fits_ulong_p()) {
        return worst_scan_u64(m.k().get_ui(), m.loop_bound().get_ui(), predicted);
    }
    WorstCase out;
    out.predicted = predicted;
    out.argmax_c = 1;
    for (const Natural& c : enumerate_Ek(m)) {
        if (c == m.k()) continue;
        Natural n1 = m.k(), n2 = c;
        std::size_t t = 0;
        while (n2 >= m.loop_bound()) {
            n1 %= n2;
            std::swap(n1, n2);
            ++t;
        }
        if (t > out.max_iterations) {
            out.max_iterations = t;
            out.argmax_c = c;
        }
    }
    return out;
}

std::pair<Natural, Natural> fib_worst_inputs(unsigned long p) {
    if (p < 3) throw ArgumentError("fib_worst_inputs requires p >= 3");
    return {fib(p + 1), fib(p)};
}

std::vector<std::pair<Natural, Natural>> inverse_table(const Modulus& m) {
    std::vector<std::pair<Natural, Natural>> out;
    for (const Natural& x : enumerate_Ek(m)) out.emplace_back(x, mod_inv(x, m));
    return out;
}

FibLemmaCheck check_fib_lemma(unsigned long max_n) {
    FibLemmaCheck out;
    out.max_n = max_n;
    for (unsigned long n = 0; n <= max_n; ++n) {
        if (n == 1) continue;  // ceil(log_phi F_2) = 0 != 1; known anomaly
        if (ceil_log_phi(fib(n + 1)) != n) ++out.violations;
    }
    for (unsigned long n = 3; n <= max_n; ++n) {
        Natural fn = fib(n);
        Natural lo = fib((n + 1) / 2), hi = fib((n + 1) / 2 + 1);
        if (!(lo * lo < fn && fn < hi * hi)) ++out.violations;
    }
    return out;
}

AnalysisReport analyze_square(const Modulus& m, std::optional<std::size_t> empirical_limit,
                              unsigned long seed) {
    require_square(m);
    AnalysisReport rep;
    rep.k = m.k();
    rep.size_Ek = static_cast<std::size_t>(totient(m.k()).get_ui());
    UnionStats st = union_stats(m);
    rep.size_Uk = st.size_Uk;
    rep.size_union = st.union_size;
    rep.size_intersection = st.intersection.size();
    rep.r = st.union_size;
    P1Result p = p1(m);
    rep.p1_exact = p.exact;
    rep.p1_closed_form = p.closed_form;
    rep.lemma2_violations = check_lemma2(m);
    if (empirical_limit)
        rep.empirical_avoidance = empirical_avoidance(m, *empirical_limit, seed).frequency;
    return rep;
}

}  // namespace kred
