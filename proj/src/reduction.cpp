#include "kred/reduction.hpp"

#include <mutex>
#include <optional>
#include <stop_token>
#include <thread>

namespace kred {
namespace {

void require_positive_coprime(const Natural& x, const Natural& y, const Modulus& m) {
    if (sgn(x) <= 0 || sgn(y) <= 0) throw ArgumentError("reduction inputs must be positive");
    Natural g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), m.k().get_mpz_t());
    if (g != 1) throw NotCoprimeError("x is not coprime to k");
    mpz_gcd(g.get_mpz_t(), y.get_mpz_t(), m.k().get_mpz_t());
    if (g != 1) throw NotCoprimeError("y is not coprime to k");
}

// State of the truncated extended-Euclid loop on f1 = (k, 0), f2 = (c, 1).
struct LoopState {
    Natural n1, n2;
    Int d1, d2;
    std::vector<Natural> quotients;

    LoopState(const Modulus& m, const Natural& c) : n1(m.k()), n2(c), d1(0), d2(1) {}

    bool exited(const Modulus& m) const { return n2 < m.loop_bound(); }

    void advance() {
        Natural q = n1 / n2;
        n1 -= q * n2;
        std::swap(n1, n2);
        d1 -= q * d2;
        std::swap(d1, d2);
        quotients.push_back(std::move(q));
    }
};

Reduction finish_c_side(LoopState&& st) {
    Reduction r;
    r.pair = {std::move(st.n2), std::move(st.d2)};
    r.trace.iterations = st.quotients.size();
    r.trace.loop_avoided = st.quotients.empty();
    r.trace.path = Path::LoopOnC;
    r.trace.quotients = std::move(st.quotients);
    return r;
}

// The s-side loop maintains n2*a == d2*b (mod k); swapping the
// components gives a pair valid for the original (x, y). The sign is
// normalized so n > 0.
Reduction finish_s_side(LoopState&& st) {
    Reduction r;
    Int n = std::move(st.d2);
    Int d = std::move(st.n2);
    if (sgn(n) < 0) {
        n = -n;
        d = -d;
    }
    r.pair = {std::move(n), std::move(d)};
    r.trace.iterations = st.quotients.size();
    r.trace.loop_avoided = st.quotients.empty();
    r.trace.path = Path::LoopOnS;
    r.trace.quotients = std::move(st.quotients);
    return r;
}

Reduction direct(Int n, Int d, Path path) {
    Reduction r;
    r.pair = {std::move(n), std::move(d)};
    r.trace.path = path;
    return r;
}

}  // namespace

Region classify(const Natural& x, const Modulus& m) {
    if (sgn(x) <= 0 || x >= m.k()) return Region::Outside;
    if (x * x < m.k()) return Region::InA;
    Natural w = m.k() - x;
    if (w * w < m.k()) return Region::InB;
    return Region::Outside;
}

bool in_U(const Natural& x, const Modulus& m) { return classify(x, m) != Region::Outside; }

const char* path_name(Path p) {
    switch (p) {
        case Path::DirectTOnPair: return "Direct-T-on-pair";
        case Path::LoopOnC: return "Loop-on-c";
        case Path::DirectTOnS: return "Direct-T-on-s";
        case Path::LoopOnS: return "Loop-on-s";
    }
    return "?";
}

std::pair<Int, Int> t_transform(const Natural& x, const Natural& y, const Modulus& m) {
    Region rx = classify(x, m), ry = classify(y, m);
    if (rx == Region::Outside || ry == Region::Outside)
        throw InvalidRegionError("t_transform inputs must lie in U_k");
    if (rx == Region::InA && ry == Region::InA) return {x, y};
    if (rx == Region::InA && ry == Region::InB) return {x, y - m.k()};
    if (rx == Region::InB && ry == Region::InA) return {m.k() - x, -y};
    return {m.k() - x, m.k() - y};
}

std::pair<Int, Int> t_transform_analytic(const Natural& x, const Natural& y, const Modulus& m) {
    Region rx = classify(x, m), ry = classify(y, m);
    if (rx == Region::Outside || ry == Region::Outside)
        throw InvalidRegionError("t_transform inputs must lie in U_k");
    int cx = (rx == Region::InB) ? 1 : 0;
    int cy = (ry == Region::InB) ? 1 : 0;
    Int sign = 1 - 2 * cx;
    return {sign * Int(x) + cx * m.k(), sign * (Int(y) - cy * m.k())};
}

Reduction jwa(const Natural& x, const Natural& y, const Modulus& m) {
    require_positive_coprime(x, y, m);
    Natural c = mod_div(x, y, m);
    LoopState st(m, c);
    while (!st.exited(m)) st.advance();
    return finish_c_side(std::move(st));
}

Reduction res(const Natural& x, const Natural& y, const Modulus& m) {
    require_positive_coprime(x, y, m);
    Natural a = x % m.k(), b = y % m.k();
    if (in_U(a, m) && in_U(b, m)) {
        auto [n, d] = t_transform(a, b, m);
        return direct(std::move(n), std::move(d), Path::DirectTOnPair);
    }
    Natural c = mod_div(a, b, m);
    LoopState st(m, c);
    while (!st.exited(m)) st.advance();
    return finish_c_side(std::move(st));
}

Reduction res_swapped(const Natural& x, const Natural& y, const Modulus& m) {
    require_positive_coprime(x, y, m);
    Natural a = x % m.k(), b = y % m.k();
    Natural s = mod_div(b, a, m);
    if (in_U(s, m)) {
        auto [n, d] = t_transform(1, s, m);
        return direct(std::move(n), std::move(d), Path::DirectTOnS);
    }
    LoopState st(m, s);
    while (!st.exited(m)) st.advance();
    return finish_s_side(std::move(st));
}

namespace {

// Shared pre-loop exits of Pares: the direct T on the residue pair,
// then the s-side and c-side single-comparison exits. Any of these
// settles the reduction without a division.
std::optional<Reduction> pares_direct_exits(const Natural& a, const Natural& b, const Natural& s,
                                            const Natural& c, const Modulus& m) {
    if (in_U(a, m) && in_U(b, m)) {
        auto [n, d] = t_transform(a, b, m);
        return direct(std::move(n), std::move(d), Path::DirectTOnPair);
    }
    if (in_U(s, m)) {
        auto [n, d] = t_transform(1, s, m);
        return direct(std::move(n), std::move(d), Path::DirectTOnS);
    }
    switch (classify(c, m)) {
        case Region::InA:
            return direct(c, 1, Path::LoopOnC);
        case Region::InB:
            // One subtraction short-circuits the single loop iteration
            // the B_k case would otherwise cost: (k - c, -1).
            return direct(m.k() - c, -1, Path::LoopOnC);
        case Region::Outside:
            break;
    }
    return std::nullopt;
}

Reduction pares_lockstep(const Natural& s, const Natural& c, const Modulus& m) {
    LoopState sside(m, s), cside(m, c);
    for (;;) {
        if (sside.exited(m)) return finish_s_side(std::move(sside));
        if (cside.exited(m)) return finish_c_side(std::move(cside));
        sside.advance();
        cside.advance();
    }
}

Reduction pares_concurrent(const Natural& s, const Natural& c, const Modulus& m) {
    std::mutex mu;
    std::optional<Reduction> winner;

    auto run = [&](const Natural& start, bool s_side, std::stop_token stop,
                   std::stop_source& other) {
        LoopState st(m, start);
        while (!st.exited(m)) {
            if (stop.stop_requested()) return;
            st.advance();
        }
        Reduction r = s_side ? finish_s_side(std::move(st)) : finish_c_side(std::move(st));
        std::lock_guard lock(mu);
        if (!winner) {
            winner = std::move(r);
            other.request_stop();
        }
    };

    std::stop_source stop_s, stop_c;
    std::thread ws([&] { run(s, true, stop_s.get_token(), stop_c); });
    std::thread wc([&] { run(c, false, stop_c.get_token(), stop_s); });
    ws.join();
    wc.join();
    return std::move(*winner);
}

}  // namespace

Reduction pares(const Natural& x, const Natural& y, const Modulus& m, RaceMode mode) {
    require_positive_coprime(x, y, m);
    Natural a = x % m.k(), b = y % m.k();
    Natural s = mod_div(b, a, m);
    Natural c = mod_div(a, b, m);
    if (auto r = pares_direct_exits(a, b, s, c, m)) return std::move(*r);
    return mode == RaceMode::Lockstep ? pares_lockstep(s, c, m) : pares_concurrent(s, c, m);
}

}  // namespace kred
