#include "kred/kary_gcd.hpp"

#include <utility>

namespace kred {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Jwa: return "jwa";
        case Algo::Res: return "res";
        case Algo::Pares: return "pares";
    }
    return "?";
}

Natural euclid_gcd(Natural u, Natural v) {
    if (sgn(u) == 0 && sgn(v) == 0) throw ArgumentError("gcd(0, 0) is undefined");
    while (sgn(v) != 0) {
        u %= v;
        std::swap(u, v);
    }
    return u;
}

StepResult kary_reduce_step(const Natural& u, const Natural& v, const Modulus& m, Algo algo,
                            RaceMode mode) {
    if (!(u > v && sgn(v) > 0)) throw ArgumentError("kary_reduce_step requires u > v > 0");
    Reduction r;
    switch (algo) {
        case Algo::Jwa: r = jwa(u, v, m); break;
        case Algo::Res: r = res(u, v, m); break;
        case Algo::Pares: r = pares(u, v, m, mode); break;
    }
    Int num = r.pair.n * v - r.pair.d * u;
    if (sgn(num) < 0) num = -num;
    if (num % m.k() != 0) throw Error("internal: k does not divide n*v - d*u");
    StepResult out;
    out.u = num / m.k();
    out.v = v;
    out.trace = std::move(r.trace);
    return out;
}

namespace {

/// Divides out all factors of two, returning the exponent removed.
std::size_t strip_twos(Natural& n) {
    if (sgn(n) == 0) return 0;
    auto e = mpz_scan1(n.get_mpz_t(), 0);
    if (e > 0) mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), e);
    return e;
}

}  // namespace

GcdReport kary_gcd(const Natural& u, const Natural& v, const Modulus& m, Algo algo,
                   RaceMode mode) {
    if (!m.power_of_four() || m.k() < 16)
        throw InvalidModulusError("kary_gcd requires k = 2^(2l) with k >= 16");
    if (sgn(u) < 0 || sgn(v) < 0) throw ArgumentError("kary_gcd operands must be non-negative");
    if (sgn(u) == 0 && sgn(v) == 0) throw ArgumentError("gcd(0, 0) is undefined");

    GcdReport report;
    if (sgn(u) == 0) {
        report.result = v;
        return report;
    }
    if (sgn(v) == 0) {
        report.result = u;
        return report;
    }

    Natural a = u, b = v;
    std::size_t ea = strip_twos(a);
    std::size_t eb = strip_twos(b);
    report.two_exponent = std::min(ea, eb);
    const Natural a_odd = a, b_odd = b;

    const Natural threshold = m.k() * m.k();
    Natural candidate;
    for (;;) {
        if (a < b) std::swap(a, b);
        if (a == b) {
            candidate = a;
            break;
        }
        if (a < threshold) {
            candidate = euclid_gcd(a, b);
            break;
        }
        StepResult step = kary_reduce_step(a, b, m, algo, mode);
        report.reduction_traces.push_back(std::move(step.trace));
        ++report.steps;
        strip_twos(step.u);
        if (sgn(step.u) == 0) {
            candidate = b;
            break;
        }
        a = std::move(step.u);
        b = std::move(step.v);
    }

    Natural g = euclid_gcd(euclid_gcd(candidate, a_odd), b_odd);
    report.spurious_removed = candidate / g;
    report.result = g << report.two_exponent;
    return report;
}

}  // namespace kred
