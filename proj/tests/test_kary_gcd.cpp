#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kred/kary_gcd.hpp"
#include "kred/numeric.hpp"

using namespace kred;

TEST_CASE("euclid_gcd") {
    CHECK(euclid_gcd(144, 89) == 1);
    CHECK(euclid_gcd(7, 7) == 7);
    CHECK(euclid_gcd(12, 18) == 6);
    CHECK(euclid_gcd(0, 5) == 5);
    CHECK(euclid_gcd(5, 0) == 5);
    CHECK_THROWS_AS(euclid_gcd(0, 0), ArgumentError);
}

TEST_CASE("kary_reduce_step example") {
    Modulus m(1024);
    StepResult s = kary_reduce_step(263, 151, m, Algo::Pares);
    CHECK(s.u == 4);  // |1*151 - (-15)*263| / 1024
    CHECK(s.v == 151);
    CHECK(s.trace.loop_avoided);
}

TEST_CASE("kary_reduce_step preconditions") {
    Modulus m(1024);
    CHECK_THROWS_AS(kary_reduce_step(151, 263, m, Algo::Jwa), ArgumentError);
    CHECK_THROWS_AS(kary_reduce_step(263, 0, m, Algo::Jwa), ArgumentError);
    CHECK_THROWS_AS(kary_reduce_step(512, 3, m, Algo::Jwa), NotCoprimeError);
}

TEST_CASE("per-step contraction bound") {
    Modulus m(16);
    StepResult s = kary_reduce_step(233, 89, m, Algo::Jwa);
    CHECK(s.u * m.root() < 233 + 89);

    Modulus m2(1 << 16);
    Natural u = (Natural(1) << 200) + 1;
    Natural v = (Natural(1) << 190) + 3;
    for (Algo a : {Algo::Jwa, Algo::Res, Algo::Pares}) {
        StepResult st = kary_reduce_step(u, v, m2, a);
        CHECK(st.u * m2.root() < u + v);
        CHECK(st.v == v);
    }
}

TEST_CASE("kary_gcd modulus validation") {
    CHECK_THROWS_AS(kary_gcd(10, 4, Modulus(100), Algo::Res), InvalidModulusError);
    CHECK_THROWS_AS(kary_gcd(10, 4, Modulus(8), Algo::Res), InvalidModulusError);
    CHECK_THROWS_AS(kary_gcd(10, 4, Modulus(4), Algo::Res), InvalidModulusError);
    CHECK_NOTHROW(kary_gcd(10, 4, Modulus(16), Algo::Res));
}

TEST_CASE("kary_gcd zero and equal operands") {
    Modulus m(1 << 16);
    CHECK(kary_gcd(0, 7, m, Algo::Res).result == 7);
    CHECK(kary_gcd(7, 0, m, Algo::Res).result == 7);
    CHECK(kary_gcd(42, 42, m, Algo::Res).result == 42);
    CHECK_THROWS_AS(kary_gcd(0, 0, m, Algo::Res), ArgumentError);
}

TEST_CASE("consecutive fibonacci numbers are coprime") {
    Modulus m(1 << 16);
    for (Algo a : {Algo::Jwa, Algo::Res, Algo::Pares})
        CHECK(kary_gcd(fib(40), fib(39), m, a).result == 1);
}

TEST_CASE("constructed common factors are recovered") {
    Modulus m(1 << 16);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(1234UL);
    for (int i = 0; i < 25; ++i) {
        Natural a = rng.get_z_bits(120) * 2 + 1;
        Natural b = rng.get_z_bits(120) * 2 + 1;
        Natural g0 = euclid_gcd(a, b);
        a /= g0;
        b /= g0;  // force coprimality
        Natural g = rng.get_z_bits(60) + 1;
        for (Algo algo : {Algo::Jwa, Algo::Res, Algo::Pares}) {
            GcdReport rep = kary_gcd(g * a, g * b, m, algo);
            CHECK(rep.result == g);
        }
    }
}

TEST_CASE("random oracle equivalence with report invariants") {
    Modulus m(1 << 16);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(77UL);
    for (int i = 0; i < 300; ++i) {
        Natural u = rng.get_z_bits(256);
        Natural v = rng.get_z_bits(256);
        if (sgn(u) == 0 && sgn(v) == 0) continue;
        GcdReport rep = kary_gcd(u, v, m, Algo::Pares);
        Natural expected = euclid_gcd(u, v);
        CHECK(rep.result == expected);
        if (sgn(u) > 0) CHECK(u % rep.result == 0);
        if (sgn(v) > 0) CHECK(v % rep.result == 0);
        CHECK(rep.reduction_traces.size() == rep.steps);
    }
}

TEST_CASE("spurious factor accounting") {
    Modulus m(1 << 16);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(31UL);
    for (int i = 0; i < 50; ++i) {
        Natural u = rng.get_z_bits(180);
        Natural v = rng.get_z_bits(180);
        if (sgn(u) == 0 || sgn(v) == 0) continue;
        GcdReport rep = kary_gcd(u, v, m, Algo::Res);
        CHECK(rep.spurious_removed >= 1);
        CHECK(rep.result == euclid_gcd(u, v));
    }
}
