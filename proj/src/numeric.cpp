#include "kred/numeric.hpp"

#include <utility>

namespace kred {

Natural isqrt(const Natural& n) {
    if (sgn(n) < 0) throw ArgumentError("isqrt: negative operand");
    Natural r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

ExtGcd ext_gcd(const Natural& a, const Natural& b) {
    if (sgn(a) == 0 && sgn(b) == 0) throw ArgumentError("ext_gcd(0, 0) is undefined");
    Natural r0 = a, r1 = b;
    Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (sgn(r1) != 0) {
        Natural q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    return {std::move(r0), std::move(x0), std::move(y0)};
}

Modulus::Modulus(Natural k) : k_(std::move(k)) {
    if (k_ <= 1) throw InvalidModulusError("modulus must satisfy k > 1");
    root_ = isqrt(k_);
    square_ = (root_ * root_ == k_);
    loop_bound_ = square_ ? root_ : root_ + 1;
    // k = 4^m iff k is a power of two with an even exponent.
    if (mpz_popcount(k_.get_mpz_t()) == 1) {
        pow4_ = (mpz_scan1(k_.get_mpz_t(), 0) % 2 == 0);
    }
}

Natural mod_inv(const Natural& x, const Modulus& m) {
    Natural xr = x % m.k();
    if (sgn(xr) < 0) xr += m.k();
    // Word-sized fast path; 61-bit cap keeps the signed cofactor arithmetic overflow-free.
    if (m.k().fits_ulong_p() && m.k().get_ui() <= (1UL << 61)) {
        unsigned long a = xr.get_ui(), b = m.k().get_ui();
        long u0 = 1, u1 = 0;
        unsigned long r0 = a, r1 = b;
        while (r1 != 0) {
            unsigned long q = r0 / r1;
            unsigned long r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            long u2 = u0 - static_cast<long>(q) * u1;
            u0 = u1;
            u1 = u2;
        }
        if (r0 != 1) throw NotCoprimeError("mod_inv: operand not coprime to k");
        long inv = u0 % static_cast<long>(b);
        if (inv < 0) inv += static_cast<long>(b);
        return Natural(static_cast<unsigned long>(inv));
    }
    ExtGcd e = ext_gcd(xr, m.k());
    if (e.g != 1) throw NotCoprimeError("mod_inv: operand not coprime to k");
    Int inv = e.x % m.k();
    if (sgn(inv) < 0) inv += m.k();
    return inv;
}

Natural mod_div(const Natural& a, const Natural& b, const Modulus& m) {
    Natural c = (a % m.k()) * mod_inv(b, m) % m.k();
    return c;
}

Natural fib(unsigned long n) {
    Natural a = 0, b = 1;
    for (unsigned long i = 0; i < n; ++i) {
        b += a;
        std::swap(a, b);
    }
    return a;
}

bool phi_pow_leq(unsigned long m, const Natural& n) {
    // phi^m <= n  iff  R := 2n - 2F_{m-1} - F_m >= 0  and  5*F_m^2 <= R^2.
    Natural fm1 = (m == 0) ? Natural(1) : fib(m - 1);  // F_{-1} = 1
    Natural fm = fib(m);
    Natural r = 2 * n - 2 * fm1 - fm;
    if (sgn(r) < 0) return false;
    return 5 * fm * fm <= r * r;
}

unsigned long floor_log_phi(const Natural& n) {
    if (n < 1) throw ArgumentError("floor_log_phi requires n >= 1");
    unsigned long m = 0;
    while (phi_pow_leq(m + 1, n)) ++m;
    return m;
}

unsigned long ceil_log_phi(const Natural& n) {
    if (n < 1) throw ArgumentError("ceil_log_phi requires n >= 1");
    if (n == 1) return 0;
    // No integer n >= 2 is an exact power of phi.
    return floor_log_phi(n) + 1;
}

Natural totient(const Natural& m) {
    if (m < 1) throw ArgumentError("totient requires m >= 1");
    Natural n = m, result = 1;
    for (Natural p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            result *= p - 1;
            while (n % p == 0) {
                n /= p;
                result *= p;
            }
        }
    }
    if (n > 1) result *= n - 1;
    return result;
}

}  // namespace kred
