#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgdeg/padic.hpp"

using namespace fg;

TEST_CASE("val_p on integers and rationals") {
    CHECK(val_p(mpq_class(48), 2) == Valuation::finite(4));
    CHECK(val_p(mpq_class(0), 3).is_infinite());
    CHECK(val_p(mpq_class(9, 5), 3) == Valuation::finite(2));
    CHECK(val_p(mpq_class(-12), 2) == Valuation::finite(2));
    CHECK_THROWS_AS(val_p(mpq_class(1, 2), 2), NotPLocalError);
}

TEST_CASE("val_p is multiplicative") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 999);
    for (std::uint64_t p : {2, 3, 5, 13}) {
        for (int i = 0; i < 500; ++i) {
            long d1 = den(rng), d2 = den(rng);
            if (d1 % p == 0 || d2 % p == 0)
                continue;
            mpq_class a(dist(rng), d1), b(dist(rng), d2);
            a.canonicalize();
            b.canonicalize();
            CHECK(val_p(a * b, p) == val_p(a, p) + val_p(b, p));
        }
    }
}

TEST_CASE("legendre_factorial_val") {
    CHECK(legendre_factorial_val(10, 2) == 8);
    CHECK(legendre_factorial_val(0, 5) == 0);
    CHECK(legendre_factorial_val(24, 3) == 10);
    // |(4m)!|_2 = 2m + |(2m)!|_2
    for (std::uint64_t m = 1; m <= 200; ++m)
        CHECK(legendre_factorial_val(4 * m, 2) == 2 * m + legendre_factorial_val(2 * m, 2));
}

TEST_CASE("in_D_p worked values") {
    CHECK(in_D_p(mpq_class(-7), 2));      // -7 = 1 mod 8
    CHECK(in_D_p(mpq_class(0), 5));
    CHECK(in_D_p(mpq_class(2), 7));       // 3^2 = 2 mod 7
    CHECK_FALSE(in_D_p(mpq_class(5), 5)); // odd valuation
    CHECK_FALSE(in_D_p(mpq_class(12), 2));// nonzero non-unit
    CHECK(in_D_p(mpq_class(9), 2));
    CHECK_FALSE(in_D_p(mpq_class(3), 2));
    CHECK(in_D_p(mpq_class(1, 9), 5));    // rational square unit
}

TEST_CASE("squares times even powers of p lie in D_p") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(1, 1000000);
    for (std::uint64_t p : {2, 3, 7}) {
        int done = 0;
        while (done < 1000) {
            long u = dist(rng);
            if (u % p == 0)
                continue;
            ++done;
            mpz_class sq = mpz_class(u) * u;
            // At p = 2 only unit squares qualify: nonzero non-units are
            // excluded from D_2 no matter how square they are.
            for (int a : {0, 1, 2}) {
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)p, (unsigned long)(2 * a));
                bool expect = (p != 2) || a == 0;
                CHECK(in_D_p(mpq_class(sq * pw), p) == expect);
            }
        }
    }
}

TEST_CASE("D_p verdict depends only on valuation and unit residue") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-50000, 50000);
    for (std::uint64_t p : {2, 3, 5}) {
        for (int i = 0; i < 400; ++i) {
            long k0 = dist(rng);
            if (k0 == 0)
                continue;
            mpq_class k(k0);
            std::uint64_t v = val_p(k, p).value();
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)p, (unsigned long)(v + 3));
            long t = dist(rng) % 20;
            mpq_class k2 = k + mpq_class(mpz_class(pw * t));
            CHECK(in_D_p(k, p) == in_D_p(k2, p));
        }
    }
}

TEST_CASE("LocalInt enforces p-coprime denominator") {
    CHECK_NOTHROW(LocalInt(mpq_class(3, 5), 2));
    CHECK_THROWS_AS(LocalInt(mpq_class(3, 10), 5), NotPLocalError);
    CHECK_THROWS_AS(LocalInt(mpq_class(1), 4), std::invalid_argument);
    LocalInt k(mpq_class(6, 4), 3);  // normalizes to 3/2
    CHECK(k.value() == mpq_class(3, 2));
    CHECK(val_p(k) == Valuation::finite(1));
}

TEST_CASE("Valuation ordering and absorption") {
    CHECK(Valuation::infinity() + Valuation::finite(5) == Valuation::infinity());
    CHECK(Valuation::finite(2) + Valuation::finite(3) == Valuation::finite(5));
    CHECK(Valuation::finite(100) < Valuation::infinity());
    CHECK(Valuation::infinity() >= 1000);
    CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
}
