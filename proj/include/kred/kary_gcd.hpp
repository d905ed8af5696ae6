#pragma once

#include <cstddef>
#include <vector>

#include "kred/reduction.hpp"

namespace kred {

/// Reduction variant driving the gcd inner step.
enum class Algo { Jwa, Res, Pares };

const char* algo_name(Algo a);

/// Record of one full k-ary gcd run.
struct GcdReport {
    std::size_t steps = 0;
    std::vector<ReductionTrace> reduction_traces;
    std::size_t two_exponent = 0;   // common factor 2^e stripped up front
    Natural spurious_removed = 1;   // factor divided out by the final cleanup
    Natural result;
};

/// Classical remainder-loop gcd; the oracle the driver is validated against.
Natural euclid_gcd(Natural u, Natural v);

struct StepResult {
    Natural u;  // |n*v - d*u| / k
    Natural v;  // min(u, v)
    ReductionTrace trace;
};

// One k-ary reduction step on u > v > 0, both coprime to k:
// (u, v) -> (|n*v - d*u| / k, v). The division is exact; a failure of
// k | n*v - d*u is an internal error.
StepResult kary_reduce_step(const Natural& u, const Natural& v, const Modulus& m, Algo algo,
                            RaceMode mode = RaceMode::Lockstep);

// Right-shift k-ary gcd for k = 2^(2l), l >= 2. Strips the common
// power of two, keeps the operands odd (factors of two cannot reach
// the gcd once the common power is out), reduces until the operands
// drop below k^2, finishes with the Euclid oracle, and removes the
// spurious factor with a final Euclid cleanup.
GcdReport kary_gcd(const Natural& u, const Natural& v, const Modulus& m, Algo algo,
                   RaceMode mode = RaceMode::Lockstep);

}  // namespace kred
