#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgdeg/ktheory.hpp"

using namespace fg;

namespace {

TruncPoly make(std::vector<long> num, std::vector<long> den = {}) {
    std::vector<mpq_class> c;
    for (size_t i = 0; i < num.size(); ++i) {
        mpq_class q(num[i], den.empty() ? 1 : den[i]);
        q.canonicalize();
        c.push_back(q);
    }
    return TruncPoly(std::move(c));
}

}  // namespace

TEST_CASE("adams_coeff worked values") {
    CHECK(adams_coeff(2, 2) == 1);
    CHECK(adams_coeff(3, 3) == 1);
    CHECK(adams_coeff(2, 3) == 0);
    CHECK(adams_coeff(1, 1) == 1);
    CHECK(adams_coeff(2, 1) == 4);
}

TEST_CASE("adams_coeff is integral for integer l") {
    for (long l = -20; l <= 20; ++l)
        for (std::uint64_t j = 1; j <= 12; ++j)
            CHECK(adams_coeff(l, j).get_den() == 1);
}

TEST_CASE("psi worked values") {
    CHECK(psi(2, 4) == make({4, 1, 0, 0}));
    CHECK(psi(3, 4) == make({9, 6, 1, 0}));
    CHECK(psi(1, 3) == make({1, 0, 0}));
}

TEST_CASE("substitute worked values") {
    TruncPoly h = make({7, -2, 5});
    CHECK(substitute(make({1, 0, 0}), h) == h);  // g = x is the identity

    CHECK(substitute(make({0, 1}), make({4, 1})) == make({0, 16}));

    TruncPoly r = substitute(make({9, 6, 1}), make({4, 1, 0}));
    CHECK(r == make({36, 105, 112}));
    CHECK(r == psi(6, 3));

    CHECK_THROWS_AS(substitute(make({1, 0}), make({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("Adams operations form a commutative semigroup") {
    for (std::uint64_t n : {1, 5, 8})
        for (long l = 1; l <= 5; ++l)
            for (long m = 1; m <= 5; ++m)
                CHECK(substitute(psi(l, n), psi(m, n)) == psi(l * m, n));
    CHECK(substitute(psi(2, 8), psi(3, 8)) == substitute(psi(3, 8), psi(2, 8)));
}

TEST_CASE("eigenvector_v1 worked values") {
    CHECK(eigenvector_v1(2, 2) == make({1, -1}, {1, 12}));
    CHECK(eigenvector_v1(2, 1) == make({1}));
    CHECK(eigenvector_v1(3, 2) == make({1, -1}, {1, 12}));
    CHECK_THROWS_AS(eigenvector_v1(1, 3), std::invalid_argument);
}

TEST_CASE("eigenvector is independent of l") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        TruncPoly v = eigenvector_v1(2, n);
        CHECK(eigenvector_v1(3, n) == v);
        CHECK(eigenvector_v1(5, n) == v);
        // v really is an eigenvector: substitute-action of psi^l scales by l^2
        for (long l : {2L, 3L}) {
            TruncPoly scaled = v;
            scaled *= mpq_class(l * l);
            CHECK(substitute(v, psi(l, n)) == scaled);
        }
    }
}

TEST_CASE("phi_endomorphism worked values") {
    CHECK(phi_endomorphism(mpq_class(9), 2) == make({9, 6}));
    CHECK(phi_endomorphism(mpq_class(2), 2) == make({2, 1}, {1, 6}));
    CHECK(phi_endomorphism(mpq_class(0), 3) == make({0, 0, 0}));
    for (long l = 2; l <= 5; ++l)
        for (std::uint64_t n = 1; n <= 6; ++n)
            CHECK(phi_endomorphism(mpq_class(l * l), n) == psi(l, n));
}

TEST_CASE("phi composition multiplies degrees") {
    const mpq_class ks[] = {mpq_class(3), mpq_class(-7), mpq_class(1, 3), mpq_class(5, 2)};
    for (const auto& a : ks)
        for (const auto& b : ks)
            for (std::uint64_t n : {2, 5})
                CHECK(substitute(phi_endomorphism(a, n), phi_endomorphism(b, n)) ==
                      phi_endomorphism(a * b, n));
}

TEST_CASE("symplectic_parity_ok") {
    CHECK(symplectic_parity_ok(make({9, 6})));
    CHECK_FALSE(symplectic_parity_ok(make({4, 1})));
    CHECK(symplectic_parity_ok(make({5})));  // no even indices
    CHECK_THROWS_AS(symplectic_parity_ok(make({1, 1}, {2, 1})), std::invalid_argument);
}

TEST_CASE("fg_ktheory worked values") {
    auto v = fg_ktheory(mpq_class(9), 2);
    CHECK(v.integral);
    CHECK(v.parity_ok);
    CHECK(v.in_FG);
    CHECK(v.phi.coeff(1) == 9);

    v = fg_ktheory(mpq_class(4), 2);
    CHECK(v.integral);
    CHECK_FALSE(v.parity_ok);
    CHECK_FALSE(v.in_FG);

    v = fg_ktheory(mpq_class(2), 2);
    CHECK_FALSE(v.integral);
    CHECK_FALSE(v.in_FG);
    CHECK(v.phi.coeff(2) == mpq_class(1, 6));
}

TEST_CASE("K-theory criterion agrees with the congruences") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> dist(-2000, 2000);
    for (int i = 0; i < 500; ++i) {
        long k = dist(rng);
        for (std::uint64_t n = 1; n <= 5; ++n)
            CHECK(fg_ktheory(mpq_class(k), n).in_FG == fg_global(mpq_class(k), n));
    }
}

TEST_CASE("psi_ko worked values and transport") {
    CHECK(psi_ko(2, 2) == make({4, 2}));
    CHECK(psi_ko(1, 3) == make({1, 0, 0}));
    CHECK(psi_ko(3, 3) == make({9, 12, 4}));
    for (long l = -6; l <= 6; ++l) {
        TruncPoly ko = psi_ko(l, 6);
        CHECK(ko.is_integral());
        TruncPoly k = psi(l, 6);
        mpq_class two_j = 2;
        for (std::uint64_t j = 1; j <= 6; ++j) {
            CHECK(2 * ko.coeff(j) == k.coeff(j) * two_j);
            two_j *= 2;
        }
    }
}

TEST_CASE("TruncPoly rendering") {
    CHECK(make({9, 6}).to_string() == "9x + 6x^2");
    CHECK(make({2, 1}, {1, 6}).to_string() == "2x + 1/6 x^2");
    CHECK(make({1, 0, -1}).to_string() == "x - x^3");
    CHECK(make({0, 0}).to_string() == "0");
}
