#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kred/numeric.hpp"

namespace kred {

// Region classification over the residues of a modulus k:
//   A_k = ]0, sqrt(k)[,  B_k = ]k - sqrt(k), k[,  U_k = A_k u B_k.
// All boundary tests are integer comparisons (x^2 < k, (k-x)^2 < k).
enum class Region { InA, InB, Outside };

Region classify(const Natural& x, const Modulus& m);

/// Whether x lies in U_k.
bool in_U(const Natural& x, const Modulus& m);

/// Output pair of a reduction: 0 < n, n^2 < k, 1 <= |d|, d^2 < k,
/// and n*y == d*x (mod k) for the algorithm inputs (x, y).
struct ReductionPair {
    Int n;
    Int d;
};

/// Which route produced the result.
enum class Path { DirectTOnPair, LoopOnC, DirectTOnS, LoopOnS };

const char* path_name(Path p);

struct ReductionTrace {
    std::size_t iterations = 0;
    bool loop_avoided = true;  // iterations == 0
    Path path = Path::LoopOnC;
    std::vector<Natural> quotients;  // one per iteration
};

struct Reduction {
    ReductionPair pair;
    ReductionTrace trace;
};

// The four-case T-transformation on U_k x U_k. The result (x', y')
// satisfies 0 < x', |y'| < sqrt(k) and x'*y == x*y' (mod k).
// Throws InvalidRegionError if either input lies outside U_k.
std::pair<Int, Int> t_transform(const Natural& x, const Natural& y, const Modulus& m);

/// Analytic form of T via the characteristic function of B_k; agrees
/// case-by-case with t_transform.
std::pair<Int, Int> t_transform_analytic(const Natural& x, const Natural& y, const Modulus& m);

enum class RaceMode { Lockstep, Concurrent };

// The accelerated reduction: c = x/y mod k, then the truncated
// extended-Euclid loop on f1 = (k, 0), f2 = (c, 1) with exit test
// n2^2 < k. Requires x, y > 0 coprime to k.
Reduction jwa(const Natural& x, const Natural& y, const Modulus& m);

// Sequential residual reduction: returns T(a, b) directly when both
// residues fall in U_k, otherwise runs the loop on c = a/b mod k.
Reduction res(const Natural& x, const Natural& y, const Modulus& m);

// Swapped-operand residual reduction: works on s = b/a mod k; returns
// T(1, s) when s is in U_k, otherwise loops on s and swaps the result
// components back (normalizing the sign so n > 0).
Reduction res_swapped(const Natural& x, const Natural& y, const Modulus& m);

// Racing residual reduction: direct T when (a, b) lies in U_k x U_k,
// then the s-side and c-side direct exits, otherwise the two residual
// loops race. Lockstep mode advances the loops alternately (s-side
// tested first, so the winner is deterministic); concurrent mode runs
// two workers and cancels the loser.
Reduction pares(const Natural& x, const Natural& y, const Modulus& m,
                RaceMode mode = RaceMode::Lockstep);

}  // namespace kred
