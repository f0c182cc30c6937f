#include "fgdeg/verify.hpp"

#include <random>
#include <sstream>

#include "fgdeg/ktheory.hpp"

namespace fg {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { out_.suite = std::move(name); }

    template <typename T, typename U>
    void check(const T& expected, const U& got, const std::string& inputs) {
        ++out_.cases_run;
        if (!(expected == got)) {
            std::ostringstream e, g;
            e << expected;
            g << got;
            out_.failures.push_back({inputs, e.str(), g.str()});
        }
    }

    void check_true(bool cond, const std::string& inputs, const std::string& expected) {
        ++out_.cases_run;
        if (!cond)
            out_.failures.push_back({inputs, expected, "violated"});
    }

    void skip(std::string what, std::string reason) {
        out_.skipped.push_back({std::move(what), std::move(reason)});
    }

    VerifyOutcome take() { return std::move(out_); }

private:
    VerifyOutcome out_;
};

std::string args(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : kv) {
        if (!first)
            os << ", ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

VerifyOutcome verify_exponent(const VerifyConfig& cfg) {
    Suite s("exponent");

    // Closed form against the scan oracle (which internally asserts the
    // full solution-set identity).
    const struct { std::uint64_t p, nmax; } grid[] = {{2, 10}, {3, 12}, {5, 12}, {7, 12}};
    for (auto [p, nmax] : grid) {
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            try {
                std::uint64_t scan = e_exponent_bruteforce(p, n, cfg.scan_guard, cfg.jobs);
                s.check(e_exponent(p, n), scan, args({{"p", (long long)p}, {"n", (long long)n}}));
            } catch (const ScanGuardError& ex) {
                s.skip(args({{"p", (long long)p}, {"n", (long long)n}}), ex.what());
            } catch (const MathCheckError& ex) {
                s.check_true(false, args({{"p", (long long)p}, {"n", (long long)n}}), ex.what());
            }
        }
    }

    // e <= f, with equality forced on n <= 5.
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        std::uint64_t prev = 0;
        for (std::uint64_t n = 1; n <= 40; ++n) {
            std::uint64_t e = e_exponent(p, n), f = f_exponent(p, n);
            s.check_true(e <= f, args({{"p", (long long)p}, {"n", (long long)n}}),
                         "e(p,n) <= f(p,n)");
            if (n <= 5)
                s.check(e, f, args({{"p", (long long)p}, {"n", (long long)n}}) + " (n<=5: e=f)");
            s.check_true(e >= prev, args({{"p", (long long)p}, {"n", (long long)n}}),
                         "e nondecreasing in n");
            prev = e;
        }
    }
    return s.take();
}

VerifyOutcome verify_congruence(const VerifyConfig& cfg) {
    (void)cfg;
    Suite s("congruence");

    // Legendre identity |(4m)!|_2 = 2m + |(2m)!|_2.
    for (std::uint64_t m = 1; m <= 200; ++m)
        s.check(legendre_factorial_val(4 * m, 2),
                2 * m + legendre_factorial_val(2 * m, 2),
                args({{"m", (long long)m}}));

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> kdist(-100000, 100000);

    // Closed form vs direct congruences at every relevant prime.
    std::vector<mpq_class> samples;
    for (int i = 0; i < 10000; ++i)
        samples.emplace_back(kdist(rng));
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        for (std::uint64_t t = 1; t <= 6; ++t) {
            mpz_class pt;
            mpz_ui_pow_ui(pt.get_mpz_t(), (unsigned long)p, (unsigned long)t);
            samples.emplace_back(pt * (kdist(rng) | 1));
        }
    for (const mpq_class& k : samples) {
        for (std::uint64_t n : {2, 5, 8}) {
            for (std::uint64_t p : primes_up_to(2 * n - 1)) {
                bool closed = fg_local_closed(k, n, p);
                bool direct = fg_local_direct(k, n, p).overall;
                std::ostringstream in;
                in << "k=" << k << ", n=" << n << ", p=" << p;
                s.check(closed, direct, in.str());
            }
        }
    }

    // Monotonicity: membership at n+1 implies membership at n.
    for (int i = 0; i < 500; ++i) {
        mpq_class k(kdist(rng));
        for (std::uint64_t n = 1; n <= 7; ++n) {
            if (fg_global(k, n + 1)) {
                std::ostringstream in;
                in << "k=" << k << ", n=" << n;
                s.check_true(fg_global(k, n), in.str(), "fg_global(k,n+1) => fg_global(k,n)");
            }
        }
    }

    // Odd squares and zero lie in every FG_n.
    for (std::uint64_t j = 0; j <= 50; ++j) {
        mpq_class k(mpz_class(2 * j + 1) * mpz_class(2 * j + 1));
        for (std::uint64_t n : {1, 6, 12}) {
            std::ostringstream in;
            in << "k=" << k << ", n=" << n;
            s.check_true(fg_global(k, n), in.str(), "odd square in FG_n");
        }
    }
    for (std::uint64_t n : {1, 5, 12})
        s.check_true(fg_global(mpq_class(0), n), args({{"k", 0}, {"n", (long long)n}}),
                     "0 in FG_n");

    // Satisfaction of C_m depends only on k mod p^{modulus_val}.
    for (int i = 0; i < 300; ++i) {
        mpq_class k(kdist(rng));
        long t = kdist(rng) % 50;
        for (std::uint64_t p : {2, 3, 5})
            for (std::uint64_t m = 1; m <= 6; ++m) {
                mpz_class shift;
                mpz_ui_pow_ui(shift.get_mpz_t(), (unsigned long)p,
                              (unsigned long)modulus_val(m, p));
                mpq_class k2 = k + mpq_class(shift * t);
                std::ostringstream in;
                in << "k=" << k << ", m=" << m << ", p=" << p << ", t=" << t;
                s.check(satisfies_C(k, m, p).first, satisfies_C(k2, m, p).first, in.str());
            }
    }
    return s.take();
}

VerifyOutcome verify_ktheory(const VerifyConfig& cfg) {
    (void)cfg;
    Suite s("ktheory");

    // Semigroup and commutation laws for the Adams operations.
    for (std::uint64_t n : {1, 4, 8})
        for (long l = 1; l <= 5; ++l)
            for (long m = 1; m <= 5; ++m) {
                std::ostringstream in;
                in << "l=" << l << ", m=" << m << ", n=" << n;
                s.check_true(substitute(psi(l, n), psi(m, n)) == psi(l * m, n),
                             in.str(), "psi^l o psi^m = psi^(lm)");
            }

    // Integer coefficients for integer l.
    for (long l = -20; l <= 20; ++l)
        for (std::uint64_t j = 1; j <= 12; ++j) {
            std::ostringstream in;
            in << "l=" << l << ", j=" << j;
            s.check_true(adams_coeff(l, j).get_den() == 1, in.str(),
                         "adams_coeff integral");
        }

    // The first eigenvector does not depend on which psi^l is diagonalized.
    for (std::uint64_t n = 1; n <= 8; ++n) {
        TruncPoly v2 = eigenvector_v1(2, n);
        for (long l : {3L, 5L}) {
            std::ostringstream in;
            in << "l=" << l << ", n=" << n;
            s.check_true(eigenvector_v1(l, n) == v2, in.str(),
                         "eigenvector independent of l");
        }
    }

    // phi at a perfect square degree is the Adams operation itself.
    for (long l = 1; l <= 5; ++l)
        for (std::uint64_t n = 1; n <= 6; ++n) {
            std::ostringstream in;
            in << "l=" << l << ", n=" << n;
            s.check_true(phi_endomorphism(mpq_class(l * l), n) == psi(l, n),
                         in.str(), "phi(l^2) = psi^l");
        }

    // Degrees multiply under composition.
    const mpq_class ks[] = {mpq_class(3), mpq_class(-7), mpq_class(1, 3),
                            mpq_class(5, 2), mpq_class(12)};
    for (const auto& a : ks)
        for (const auto& b : ks)
            for (std::uint64_t n : {3, 6}) {
                std::ostringstream in;
                in << "k=" << a << ", k'=" << b << ", n=" << n;
                s.check_true(substitute(phi_endomorphism(a, n), phi_endomorphism(b, n)) ==
                                 phi_endomorphism(a * b, n),
                             in.str(), "phi(k) o phi(k') = phi(kk')");
            }

    // KO transport: psi_ko coefficients are c_j 2^(j-1), integral for
    // integer l.
    for (long l = -6; l <= 6; ++l)
        for (std::uint64_t n : {3, 8}) {
            TruncPoly ko = psi_ko(l, n);
            std::ostringstream in;
            in << "l=" << l << ", n=" << n;
            s.check_true(ko.is_integral(), in.str(), "psi_ko integral");
            TruncPoly k = psi(l, n);
            bool transport = true;
            mpq_class two_j = 2;  // 2^j
            for (std::uint64_t j = 1; j <= n; ++j) {
                if (2 * ko.coeff(j) != k.coeff(j) * two_j)
                    transport = false;
                two_j *= 2;
            }
            s.check_true(transport, in.str(), "2 psi_ko = psi scaled by 2^j");
        }

    // Cross-oracle: the K-theory criterion agrees with the congruences.
    for (std::uint64_t n = 1; n <= 5; ++n)
        for (long k = -2000; k <= 2000; ++k) {
            bool kt = fg_ktheory(mpq_class(k), n).in_FG;
            bool cg = fg_global(mpq_class(k), n);
            if (kt != cg) {
                std::ostringstream in;
                in << "k=" << k << ", n=" << n;
                s.check(cg, kt, in.str());
            } else {
                s.check_true(true, "", "");
            }
        }
    return s.take();
}

std::vector<VerifyOutcome> verify_all(const VerifyConfig& cfg) {
    return {verify_exponent(cfg), verify_congruence(cfg), verify_ktheory(cfg)};
}

}  // namespace fg
