#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "kred.h"

namespace {

struct Mod {
    kred_modulus* m = nullptr;
    explicit Mod(const char* k) { REQUIRE(kred_modulus_new(k, &m) == KRED_OK); }
    ~Mod() { kred_modulus_free(m); }
};

struct Rep {
    kred_report* r = nullptr;
    ~Rep() { kred_report_free(r); }
    std::string get(const char* key) const {
        const char* v = kred_report_get(r, key);
        REQUIRE(v != nullptr);
        return v;
    }
};

}  // namespace

TEST_CASE("modulus lifecycle and validation") {
    kred_modulus* m = nullptr;
    CHECK(kred_modulus_new("1", &m) == KRED_ERR_INVALID_MODULUS);
    CHECK(m == nullptr);  // out pointer untouched on failure
    CHECK(std::strlen(kred_last_error()) > 0);
    CHECK(kred_modulus_new("abc", &m) == KRED_ERR_ARGUMENT);
    CHECK(kred_modulus_new("-5", &m) == KRED_ERR_ARGUMENT);
    CHECK(kred_modulus_new("16", &m) == KRED_OK);
    kred_modulus_free(m);
    kred_modulus_free(nullptr);  // must be a no-op
}

TEST_CASE("reduce: worked fibonacci example through the boundary") {
    Mod m("144");
    Rep r;
    REQUIRE(kred_reduce(m.m, "89", "1", KRED_ALGO_JWA, KRED_MODE_LOCKSTEP, &r.r) == KRED_OK);
    CHECK(r.get("n") == "8");
    CHECK(r.get("d") == "-8");
    CHECK(r.get("iterations") == "5");
    CHECK(r.get("loop_avoided") == "false");
    CHECK(r.get("quotients") == "1,1,1,1,1");
}

TEST_CASE("reduce: direct s-path via pares") {
    Mod m("1024");
    Rep r;
    REQUIRE(kred_reduce(m.m, "263", "151", KRED_ALGO_PARES, KRED_MODE_LOCKSTEP, &r.r) == KRED_OK);
    CHECK(r.get("n") == "1");
    CHECK(r.get("d") == "-15");
    CHECK(r.get("loop_avoided") == "true");
    CHECK(r.get("path") == "Direct-T-on-s");
}

TEST_CASE("reduce: concurrent mode agrees on the pair contract") {
    Mod m("1024");
    Rep r;
    REQUIRE(kred_reduce(m.m, "263", "151", KRED_ALGO_PARES, KRED_MODE_CONCURRENT, &r.r) ==
            KRED_OK);
    // |n*151 - d*263| must be divisible by 1024; both winners satisfy it.
    long n = std::stol(r.get("n"));
    long d = std::stol(r.get("d"));
    long lc = n * 151 - d * 263;
    CHECK((lc < 0 ? -lc : lc) % 1024 == 0);
}

TEST_CASE("reduce error codes") {
    Mod m("16");
    kred_report* r = nullptr;
    CHECK(kred_reduce(m.m, "4", "2", KRED_ALGO_RES, KRED_MODE_LOCKSTEP, &r) ==
          KRED_ERR_NOT_COPRIME);
    CHECK(kred_reduce(m.m, "0", "3", KRED_ALGO_RES, KRED_MODE_LOCKSTEP, &r) ==
          KRED_ERR_ARGUMENT);
    CHECK(kred_reduce(m.m, "3", "5", 99, KRED_MODE_LOCKSTEP, &r) == KRED_ERR_ARGUMENT);
    CHECK(r == nullptr);
}

TEST_CASE("gcd report fields") {
    Mod m("65536");
    Rep r;
    REQUIRE(kred_gcd(m.m, "144", "89", KRED_ALGO_PARES, KRED_MODE_LOCKSTEP, &r.r) == KRED_OK);
    CHECK(r.get("gcd") == "1");
    CHECK(r.get("spurious_removed") != "");
    CHECK(r.get("two_exponent") == "0");

    Rep r2;
    REQUIRE(kred_gcd(m.m, "840", "360", KRED_ALGO_RES, KRED_MODE_LOCKSTEP, &r2.r) == KRED_OK);
    CHECK(r2.get("gcd") == "120");

    kred_report* bad = nullptr;
    Mod m100("100");
    CHECK(kred_gcd(m100.m, "10", "4", KRED_ALGO_RES, KRED_MODE_LOCKSTEP, &bad) ==
          KRED_ERR_INVALID_MODULUS);
}

TEST_CASE("euclid gcd") {
    Rep r;
    REQUIRE(kred_euclid_gcd("123456789123456789", "987654321987654321", &r.r) == KRED_OK);
    CHECK(r.get("gcd") == "9000000009");
    kred_report* bad = nullptr;
    CHECK(kred_euclid_gcd("0", "0", &bad) == KRED_ERR_ARGUMENT);
}

TEST_CASE("analyze p1") {
    Mod m("64");
    Rep r;
    REQUIRE(kred_analyze_p1(m.m, 1, 0, 20240817ULL, &r.r) == KRED_OK);
    CHECK(r.get("p1_exact") == "7/16");
    CHECK(r.get("p1_closed_form") == "7/16");
    CHECK(r.get("empirical_exhaustive") == "true");
    CHECK(r.get("empirical_avoidance") == "59/128");

    Mod m144("144");
    Rep r144;
    REQUIRE(kred_analyze_p1(m144.m, 0, 0, 0, &r144.r) == KRED_OK);
    CHECK(r144.get("p1_exact") == "7/24");
    CHECK(kred_report_get(r144.r, "p1_closed_form") == nullptr);  // only for k = 4^l

    Mod m60("60");
    kred_report* bad = nullptr;
    CHECK(kred_analyze_p1(m60.m, 0, 0, 0, &bad) == KRED_ERR_NOT_SQUARE);
}

TEST_CASE("analyze lemma2") {
    Mod m("17");
    Rep r;
    REQUIRE(kred_analyze_lemma2(m.m, &r.r) == KRED_OK);
    CHECK(r.get("violations") == "1");
    CHECK(r.get("violation.4") == "13");

    Mod sq("4096");
    Rep rs;
    REQUIRE(kred_analyze_lemma2(sq.m, &rs.r) == KRED_OK);
    CHECK(rs.get("violations") == "0");
}

TEST_CASE("analyze union") {
    Mod m("64");
    Rep r;
    REQUIRE(kred_analyze_union(m.m, &r.r) == KRED_OK);
    CHECK(r.get("size_Uk") == "8");
    CHECK(r.get("union_size") == "14");
    CHECK(r.get("intersection") == "1,63");
    CHECK(r.get("union") == "1,3,5,7,9,13,21,43,51,55,57,59,61,63");
}

TEST_CASE("analyze worst") {
    Mod m("144");
    Rep r;
    REQUIRE(kred_analyze_worst(m.m, 1, &r.r) == KRED_OK);
    CHECK(r.get("max_iterations") == "5");
    CHECK(r.get("argmax_c") == "89");
    CHECK(r.get("predicted") == "5");

    Rep np;
    REQUIRE(kred_analyze_worst(m.m, 0, &np.r) == KRED_OK);
    CHECK(np.get("predicted") == "5");
    CHECK(kred_report_get(np.r, "max_iterations") == nullptr);
}

TEST_CASE("inverse table rows preserve E_k order") {
    Mod m("16");
    Rep r;
    REQUIRE(kred_analyze_inverse_table(m.m, &r.r) == KRED_OK);
    REQUIRE(kred_report_size(r.r) == 8);
    const char* xs[] = {"1", "3", "5", "7", "9", "11", "13", "15"};
    const char* invs[] = {"1", "11", "13", "7", "9", "3", "5", "15"};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(std::string(kred_report_key(r.r, i)) == xs[i]);
        CHECK(std::string(kred_report_value(r.r, i)) == invs[i]);
    }
    CHECK(kred_report_key(r.r, 8) == nullptr);
}

TEST_CASE("fib lemma") {
    Rep r;
    REQUIRE(kred_analyze_fib_lemma(60, &r.r) == KRED_OK);
    CHECK(r.get("ok") == "true");
    CHECK(r.get("violations") == "0");
}

TEST_CASE("status names") {
    CHECK(std::string(kred_status_name(KRED_OK)) == "ok");
    CHECK(std::string(kred_status_name(KRED_ERR_NOT_COPRIME)) == "not-coprime");
    CHECK(std::string(kred_status_name(42)) == "unknown");
}
