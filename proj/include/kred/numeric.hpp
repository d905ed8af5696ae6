#pragma once

#include <gmpxx.h>

#include "kred/errors.hpp"

namespace kred {

/// Arbitrary-precision non-negative integer.
using Natural = mpz_class;
/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Floor of the square root: returns r with r^2 <= n < (r+1)^2.
Natural isqrt(const Natural& n);

struct ExtGcd {
    Natural g;
    Int x;
    Int y;
};

/// Extended Euclid: g = gcd(a, b) with a*x + b*y = g. Requires not both zero.
ExtGcd ext_gcd(const Natural& a, const Natural& b);

/// A modulus k > 1 with its cached integer square root and structural flags.
class Modulus {
public:
    explicit Modulus(Natural k);

    const Natural& k() const { return k_; }
    /// floor(sqrt(k)).
    const Natural& root() const { return root_; }
    bool perfect_square() const { return square_; }
    bool power_of_four() const { return pow4_; }

    /// Smallest n with n^2 >= k; the while-loop guard "n2 >= sqrt(k)" is n2 >= loop_bound().
    const Natural& loop_bound() const { return loop_bound_; }

private:
    Natural k_;
    Natural root_;
    Natural loop_bound_;
    bool square_ = false;
    bool pow4_ = false;
};

/// Inverse of x modulo k, as the canonical representative in [1, k).
/// Throws NotCoprimeError if gcd(x, k) != 1.
Natural mod_inv(const Natural& x, const Modulus& m);

/// c in [0, k) with c*b == a (mod k). Throws NotCoprimeError if gcd(b, k) != 1.
Natural mod_div(const Natural& a, const Natural& b, const Modulus& m);

/// n-th Fibonacci number, F_0 = 0, F_1 = 1.
Natural fib(unsigned long n);

// Exact floor/ceil of log base phi, phi = (1+sqrt(5))/2, for n >= 1.
//
// Computed entirely in integer arithmetic from the identity
// phi^m = F_m*phi + F_{m-1}: with R = 2n - 2F_{m-1} - F_m,
// phi^m <= n holds iff R >= 0 and 5*F_m^2 <= R^2. Floating-point logs
// mis-floor near Fibonacci boundaries, which is exactly where the
// worst cases live.
unsigned long floor_log_phi(const Natural& n);
unsigned long ceil_log_phi(const Natural& n);

/// Whether phi^m <= n, decided exactly.
bool phi_pow_leq(unsigned long m, const Natural& n);

/// Euler's totient, by trial-division factorization. Requires m >= 1.
Natural totient(const Natural& m);

}  // namespace kred
