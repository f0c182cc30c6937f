#include "fgdeg/congruence.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace fg {

namespace {

// Chunked parallel loop over [0, count). body(chunk_index, begin, end).
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned jobs, Body body) {
    if (jobs <= 1 || count < 4096) {
        body(0, 0, count);
        return;
    }
    unsigned workers = std::min<std::uint64_t>(jobs, count);
    std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = std::min(begin + chunk, count);
        if (begin >= end)
            break;
        threads.emplace_back([&, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : threads)
        t.join();
}

std::uint64_t val64_cap(std::int64_t x, std::uint64_t p, std::uint64_t cap) {
    if (x == 0)
        return cap;
    std::uint64_t ux = x < 0 ? ~static_cast<std::uint64_t>(x) + 1
                             : static_cast<std::uint64_t>(x);
    std::uint64_t v = 0;
    while (v < cap && ux % p == 0) {
        ux /= p;
        ++v;
    }
    return v;
}

// Does the class of r satisfy C_1..C_n at prime p? mv[m-1] holds the
// modulus valuation of C_m; each factor's valuation is capped at `cap`
// (>= every mv), which keeps the test a function of r mod p^cap.
bool residue_satisfies(std::uint64_t r, std::uint64_t p,
                       const std::vector<std::uint64_t>& mv, std::uint64_t cap) {
    std::uint64_t sum = 0;
    std::int64_t ri = static_cast<std::int64_t>(r);
    for (std::uint64_t m = 1; m <= mv.size(); ++m) {
        std::int64_t i = static_cast<std::int64_t>(m) - 1;
        sum += val64_cap(ri - i * i, p, cap);
        if (sum < mv[m - 1])
            return false;
    }
    return true;
}

std::vector<std::uint64_t> modulus_vals(std::uint64_t n, std::uint64_t p) {
    std::vector<std::uint64_t> mv(n);
    for (std::uint64_t m = 1; m <= n; ++m)
        mv[m - 1] = modulus_val(m, p);
    return mv;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

std::string to_string(ProvenStatus s) {
    switch (s) {
        case ProvenStatus::ProvenNLe5: return "PROVEN_N_LE_5";
        case ProvenStatus::ProvenOddRange: return "PROVEN_ODD_RANGE";
        case ProvenStatus::Open: return "OPEN";
    }
    return "OPEN";
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::uint64_t modulus_val(std::uint64_t m, std::uint64_t p) {
    if (m < 1)
        throw std::invalid_argument("modulus_val: m >= 1 required");
    std::uint64_t v = legendre_factorial_val(2 * m, p);
    if (p == 2 && m % 2 == 1)
        --v;  // modulus (2m)!/2 for odd m
    return v;
}

std::pair<bool, Valuation> satisfies_C(const mpq_class& k, std::uint64_t m,
                                       std::uint64_t p) {
    std::uint64_t need = modulus_val(m, p);
    Valuation sum = Valuation::finite(0);
    for (std::uint64_t i = 0; i < m; ++i) {
        mpq_class factor = k - mpq_class(static_cast<unsigned long>(i * i));
        sum += val_p(factor, p);
        if (sum.is_infinite())
            break;
    }
    return {sum >= need, sum};
}

CongruenceVerdict fg_local_direct(const mpq_class& k, std::uint64_t n,
                                  std::uint64_t p) {
    CongruenceVerdict v{k, p, n, {}, true};
    v.per_level.reserve(n);
    for (std::uint64_t m = 1; m <= n; ++m) {
        auto [ok, pv] = satisfies_C(k, m, p);
        v.per_level.push_back({m, pv, modulus_val(m, p), ok});
        v.overall = v.overall && ok;
    }
    return v;
}

std::uint64_t e_exponent(std::uint64_t p, std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("e_exponent: n >= 1 required");
    if (n == 1)
        return 0;
    if (p == 2)
        return 1 + 2 * (std::bit_width(n) - 1);
    // Count k <= n of the form p^j or ((p+1)/2) p^(j-1), j >= 1.
    std::uint64_t count = 0;
    for (std::uint64_t q = p; q <= n; q *= p)
        ++count;
    std::uint64_t half = (p + 1) / 2;
    for (std::uint64_t q = half; q <= n; q *= p)
        ++count;
    return count;
}

std::uint64_t f_exponent(std::uint64_t p, std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("f_exponent: n >= 1 required");
    if (n <= 5)
        return e_exponent(p, n);
    if (p == 2)
        return 4 * (n / 2) - 3;
    // -[1 - (2n-2)/(p-1)] with an exact floor.
    std::int64_t numer = static_cast<std::int64_t>(p) + 1 - 2 * static_cast<std::int64_t>(n);
    std::int64_t denom = static_cast<std::int64_t>(p) - 1;
    return static_cast<std::uint64_t>(-floor_div(numer, denom));
}

bool fg_local_closed(const mpq_class& k, std::uint64_t n, std::uint64_t p) {
    return in_D_p(k, p) || val_p(k, p) >= e_exponent(p, n);
}

GlobalVerdict fg_global_verdict(const mpq_class& k, std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("fg_global: n >= 1 required");
    GlobalVerdict v{k, n, {}, true};
    for (std::uint64_t p : primes_up_to(2 * n - 1)) {
        v.per_prime.push_back(fg_local_direct(k, n, p));
        v.member = v.member && v.per_prime.back().overall;
    }
    return v;
}

bool fg_global(const mpq_class& k, std::uint64_t n) {
    GlobalVerdict v = fg_global_verdict(k, n);
    if (k.get_den() == 1) {
        // Independent route for integers: big-integer divisibility of the
        // products by the moduli themselves.
        mpz_class kz = k.get_num();
        mpz_class prod = 1, modulus = 1;
        bool direct = true;
        for (std::uint64_t m = 1; m <= n; ++m) {
            mpz_class i2(static_cast<unsigned long>((m - 1) * (m - 1)));
            prod *= kz - i2;
            modulus *= static_cast<unsigned long>(2 * m - 1);
            modulus *= static_cast<unsigned long>(2 * m);  // now (2m)!
            mpz_class level_mod = (m % 2 == 1) ? modulus / 2 : modulus;
            if (!mpz_divisible_p(prod.get_mpz_t(), level_mod.get_mpz_t()))
                direct = false;
        }
        if (direct != v.member)
            throw MathCheckError("fg_global: valuation route disagrees with divisibility route");
    }
    return v.member;
}

mpz_class minimal_sound_modulus(std::uint64_t n) {
    mpz_class M = 1;
    for (std::uint64_t p : primes_up_to(2 * n - 1)) {
        std::uint64_t c = 0;
        for (std::uint64_t m = 1; m <= n; ++m)
            c = std::max(c, modulus_val(m, p));
        mpz_class pc;
        mpz_ui_pow_ui(pc.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(c));
        M *= pc;
    }
    return M;
}

std::vector<std::uint64_t> fg_residues(std::uint64_t n, const mpz_class& M,
                                       std::uint64_t scan_guard, unsigned jobs) {
    if (n < 1 || M < 1)
        throw std::invalid_argument("fg_residues: n >= 1 and M >= 1 required");

    struct PrimeData {
        std::uint64_t p;
        std::vector<std::uint64_t> mv;
        std::uint64_t cap;
    };
    std::vector<PrimeData> active;
    for (std::uint64_t p : primes_up_to(2 * n - 1)) {
        auto mv = modulus_vals(n, p);
        std::uint64_t c = *std::max_element(mv.begin(), mv.end());
        mpz_class pc;
        mpz_ui_pow_ui(pc.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(c));
        if (!mpz_divisible_p(M.get_mpz_t(), pc.get_mpz_t()))
            throw std::invalid_argument(
                "fg_residues: modulus not divisible by p^" + std::to_string(c) +
                " for p=" + std::to_string(p));
        if (c > 0)
            active.push_back({p, std::move(mv), c});
    }
    if (M > scan_guard)
        throw ScanGuardError("fg_residues: modulus exceeds the scan guard");
    std::uint64_t count = M.get_ui();

    unsigned workers = jobs > 0 ? jobs : 1;
    std::vector<std::vector<std::uint64_t>> partial(workers);
    parallel_chunks(count, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        auto& out = partial[w];
        for (std::uint64_t r = begin; r < end; ++r) {
            bool ok = true;
            for (const auto& pd : active)
                if (!residue_satisfies(r, pd.p, pd.mv, pd.cap)) {
                    ok = false;
                    break;
                }
            if (ok)
                out.push_back(r);
        }
    });
    std::vector<std::uint64_t> result;
    for (auto& part : partial)
        result.insert(result.end(), part.begin(), part.end());
    return result;
}

std::uint64_t e_exponent_bruteforce(std::uint64_t p, std::uint64_t n,
                                    std::uint64_t scan_guard, unsigned jobs) {
    if (n < 1)
        throw std::invalid_argument("e_exponent_bruteforce: n >= 1 required");
    auto mv = modulus_vals(n, p);
    std::uint64_t c = *std::max_element(mv.begin(), mv.end());
    if (c == 0)
        return 0;  // no congruence has a p-part; every class solves the system

    std::uint64_t classes = 1;
    for (std::uint64_t i = 0; i < c; ++i) {
        if (classes > scan_guard / p)
            throw ScanGuardError("e_exponent_bruteforce: p^c exceeds the scan guard");
        classes *= p;
    }
    if (p == 2 && c < 3)
        throw MathCheckError("e_exponent_bruteforce: cannot classify units mod 8");

    unsigned workers = jobs > 0 ? jobs : 1;
    std::vector<char> solves(classes, 0);
    std::vector<std::uint64_t> chunk_max(workers, 0);
    std::vector<char> chunk_all(workers, 1);
    parallel_chunks(classes, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t r = begin; r < end; ++r) {
            if (residue_satisfies(r, p, mv, c)) {
                solves[r] = 1;
            } else {
                chunk_all[w] = 0;
                chunk_max[w] = std::max(chunk_max[w],
                                        val64_cap(static_cast<std::int64_t>(r), p, c));
            }
        }
    });
    if (!solves[0])
        throw MathCheckError("e_exponent_bruteforce: 0 fails the congruence system");

    bool all = true;
    std::uint64_t worst = 0;
    for (unsigned w = 0; w < workers; ++w) {
        all = all && chunk_all[w];
        worst = std::max(worst, chunk_max[w]);
    }
    std::uint64_t t = all ? 0 : worst + 1;

    // Full set identity: below the p^t threshold the solutions are exactly
    // the classes compatible with D_p membership.
    auto compatible = [&](std::uint64_t r, std::uint64_t v) {
        if (p == 2)
            return v == 0 && r % 8 == 1;
        if (v % 2 != 0)
            return false;
        std::uint64_t unit = r;
        for (std::uint64_t i = 0; i < v; ++i)
            unit /= p;
        return is_qr_mod(unit % p, p);
    };
    std::vector<char> chunk_ok(workers, 1);
    parallel_chunks(classes, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t r = begin; r < end; ++r) {
            if (r == 0)
                continue;
            std::uint64_t v = val64_cap(static_cast<std::int64_t>(r), p, c);
            if (v >= t)
                continue;  // covered by the p^t branch
            if (static_cast<bool>(solves[r]) != compatible(r, v)) {
                chunk_ok[w] = 0;
                return;
            }
        }
    });
    for (unsigned w = 0; w < workers; ++w)
        if (!chunk_ok[w])
            throw MathCheckError(
                "e_exponent_bruteforce: solution set is not D_p plus p^t Z at p=" +
                std::to_string(p) + ", n=" + std::to_string(n));
    return t;
}

ProvenStatus proven_status(std::uint64_t p, std::uint64_t n) {
    if (n <= 5)
        return ProvenStatus::ProvenNLe5;
    if (p > 2 && 2 * n < (2 * p + 1) * (p - 1))
        return ProvenStatus::ProvenOddRange;
    return ProvenStatus::Open;
}

}  // namespace fg
