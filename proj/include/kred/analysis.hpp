#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kred/reduction.hpp"

namespace kred {

/// Exact rational; probabilities never pass through floating point.
using Rational = mpq_class;

/// E_k: residues in [1, k] coprime to k, ascending.
std::vector<Natural> enumerate_Ek(const Modulus& m);

struct Lemma2Violation {
    Natural x;
    Natural inverse;
};

// For every x in E_k with 1 < x < sqrt(k), tests
// sqrt(k) < 1/x mod k < k - sqrt(k) by integer comparisons and
// returns the failures. Empty for every square k >= 9; k = 17 yields
// the counterexample (4, 13).
std::vector<Lemma2Violation> check_lemma2(const Modulus& m);

struct UnionStats {
    std::vector<Natural> intersection;  // U_k n lambda(U_k)
    std::vector<Natural> union_set;     // U_k u lambda(U_k), ascending
    std::size_t union_size = 0;
    std::size_t size_Uk = 0;
};

/// Enumerates U_k against its image under lambda(x) = 1/x mod k.
/// Requires a perfect-square k >= 9.
UnionStats union_stats(const Modulus& m);

struct P1Result {
    Rational exact;                      // (4*phi(sqrt(k)) - 2) / phi(k)
    std::optional<Rational> closed_form; // 1/2^(l-2) - 1/2^(2l-2) when k = 2^(2l)
    std::size_t r = 0;                   // |U_k u lambda(U_k)|, by enumeration
    Natural phi_k;
};

// Lower bound on the probability that the racing reduction avoids its
// while loop. The exact value is cross-validated against direct
// enumeration for k <= 2^16.
P1Result p1(const Modulus& m);

struct AvoidanceResult {
    Rational frequency;
    bool exhaustive = true;
    std::size_t trials = 0;
};

// Fraction of coprime pairs (x, y) for which pares(lockstep) avoids
// the loop: exhaustive over E_k x E_k, or a seeded uniform sample when
// |E_k|^2 exceeds exhaustive_limit.
AvoidanceResult empirical_avoidance(const Modulus& m, std::size_t exhaustive_limit,
                                    unsigned long seed = 20240817UL);

struct WorstCase {
    std::size_t max_iterations = 0;
    Natural argmax_c;  // smallest witness in E_k
    std::size_t predicted = 0;  // floor(log_phi(k)) / 2
};

/// Runs the accelerated-reduction loop for every c in E_k.
WorstCase worst_case_scan(const Modulus& m);

/// The worst-case inputs (k, c) = (F_{p+1}, F_p). Requires p >= 3.
std::pair<Natural, Natural> fib_worst_inputs(unsigned long p);

/// The full inverse table (x, 1/x mod k) over E_k.
std::vector<std::pair<Natural, Natural>> inverse_table(const Modulus& m);

struct FibLemmaCheck {
    unsigned long max_n = 0;
    std::size_t violations = 0;  // n = 1 is excluded (known anomaly)
};

/// Machine-checks the Fibonacci log/squares properties for
/// n in {0} u [2, max_n] and n in [3, max_n] respectively.
FibLemmaCheck check_fib_lemma(unsigned long max_n);

/// Aggregated enumeration results for a square modulus.
struct AnalysisReport {
    Natural k;
    std::size_t size_Ek = 0;
    std::size_t size_Uk = 0;
    std::size_t size_union = 0;
    std::size_t size_intersection = 0;
    std::size_t r = 0;
    Rational p1_exact;
    std::optional<Rational> p1_closed_form;
    std::vector<Lemma2Violation> lemma2_violations;
    std::optional<Rational> empirical_avoidance;
};

AnalysisReport analyze_square(const Modulus& m, std::optional<std::size_t> empirical_limit,
                              unsigned long seed = 20240817UL);

}  // namespace kred
