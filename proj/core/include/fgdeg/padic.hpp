#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include "fgdeg/valuation.hpp"

namespace fg {

/// Thrown when a rational falls outside the ring of p-local integers
/// (its denominator is divisible by p).
class NotPLocalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t p);

/// An element of Z_(p): an exact reduced rational whose denominator is
/// coprime to the context prime p.
class LocalInt {
public:
    LocalInt(mpq_class value, std::uint64_t prime);
    LocalInt(long value, std::uint64_t prime) : LocalInt(mpq_class(value), prime) {}

    const mpq_class& value() const { return value_; }
    std::uint64_t prime() const { return prime_; }

private:
    mpq_class value_;
    std::uint64_t prime_;
};

/// p-adic valuation of an exact rational. Infinity iff k = 0.
/// The denominator must be coprime to p (throws NotPLocalError otherwise).
Valuation val_p(const mpq_class& k, std::uint64_t p);

inline Valuation val_p(const LocalInt& k) { return val_p(k.value(), k.prime()); }

/// Legendre's formula: the exponent of p in m!, i.e. sum of floor(m/p^i).
std::uint64_t legendre_factorial_val(std::uint64_t m, std::uint64_t p);

/// The p-coprime unit part of k (numerator with p-power removed, times the
/// inverse of the denominator) reduced modulo `mod`, which must be a power
/// of p. k must be nonzero.
std::uint64_t unit_part_mod(const mpq_class& k, std::uint64_t p, std::uint64_t mod);

/// Membership in D_p, the p-adically closed set of realizable degrees at
/// infinite level: for p = 2, zero together with the units congruent to
/// 1 mod 8; for odd p, the p-adic squares (even valuation, quadratic
/// residue unit part).
bool in_D_p(const mpq_class& k, std::uint64_t p);

inline bool in_D_p(const LocalInt& k) { return in_D_p(k.value(), k.prime()); }

/// Euler-criterion quadratic residue test: u^((p-1)/2) = 1 mod p for odd
/// prime p and u coprime to p.
bool is_qr_mod(std::uint64_t u, std::uint64_t p);

}  // namespace fg
