#include "fgdeg/padic.hpp"

namespace fg {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    mpz_class z(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

LocalInt::LocalInt(mpq_class value, std::uint64_t prime)
    : value_(std::move(value)), prime_(prime) {
    if (!is_prime(prime_))
        throw std::invalid_argument("LocalInt: context must be a prime");
    value_.canonicalize();
    if (mpz_divisible_ui_p(value_.get_den().get_mpz_t(),
                           static_cast<unsigned long>(prime_)))
        throw NotPLocalError("LocalInt: denominator divisible by p");
}

Valuation val_p(const mpq_class& k, std::uint64_t p) {
    if (k == 0)
        return Valuation::infinity();
    if (mpz_divisible_ui_p(k.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw NotPLocalError("val_p: denominator divisible by p");
    mpz_class reduced;
    mpz_class pz(static_cast<unsigned long>(p));
    mp_bitcnt_t v =
        mpz_remove(reduced.get_mpz_t(), k.get_num().get_mpz_t(), pz.get_mpz_t());
    return Valuation::finite(v);
}

std::uint64_t legendre_factorial_val(std::uint64_t m, std::uint64_t p) {
    std::uint64_t total = 0;
    while (m > 0) {
        m /= p;
        total += m;
    }
    return total;
}

std::uint64_t unit_part_mod(const mpq_class& k, std::uint64_t p, std::uint64_t mod) {
    if (k == 0)
        throw std::invalid_argument("unit_part_mod: k must be nonzero");
    mpz_class unit, pz(static_cast<unsigned long>(p));
    mpz_remove(unit.get_mpz_t(), k.get_num().get_mpz_t(), pz.get_mpz_t());
    mpz_class m(static_cast<unsigned long>(mod));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), k.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotPLocalError("unit_part_mod: denominator not invertible");
    mpz_class r = (unit * dinv) % m;
    if (r < 0)
        r += m;
    return r.get_ui();
}

bool is_qr_mod(std::uint64_t u, std::uint64_t p) {
    mpz_class base(static_cast<unsigned long>(u % p));
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(),
                static_cast<unsigned long>((p - 1) / 2), pz.get_mpz_t());
    return r == 1;
}

bool in_D_p(const mpq_class& k, std::uint64_t p) {
    if (k == 0)
        return true;
    Valuation v = val_p(k, p);
    if (p == 2) {
        // Units congruent to 1 mod 8; nonzero non-units are excluded.
        return v == Valuation::finite(0) && unit_part_mod(k, 2, 8) == 1;
    }
    if (v.value() % 2 != 0)
        return false;
    // Even valuation and QR unit part: Hensel's lemma lifts the square
    // root mod p to Z_p, so this decides p-adic squareness exactly.
    return is_qr_mod(unit_part_mod(k, p, p), p);
}

}  // namespace fg
