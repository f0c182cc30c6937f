#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fgdeg/padic.hpp"
#include "fgdeg/valuation.hpp"

namespace fg {

/// Default ceiling on the number of residue classes a brute-force scan
/// may enumerate.
inline constexpr std::uint64_t kDefaultScanGuard = std::uint64_t{1} << 24;

/// A scan was requested that exceeds the residue-class guard.
class ScanGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed: a closed form disagrees with an
/// exhaustive scan or two independent evaluation routes disagree.
/// This is a mathematical failure, never an input error.
class MathCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Evidence for a single congruence C_m at a fixed prime.
struct LevelEvidence {
    std::uint64_t m;
    Valuation product_val;       // valuation of prod_{i<m} (k - i^2)
    std::uint64_t modulus_val;   // valuation of the modulus of C_m
    bool satisfied;              // product_val >= modulus_val
};

/// Outcome of the congruence system C_1..C_n at one prime.
struct CongruenceVerdict {
    mpq_class k;
    std::uint64_t prime;
    std::uint64_t n;
    std::vector<LevelEvidence> per_level;
    bool overall;  // conjunction of the per-level flags
};

/// Whether the degree-realization converse is proved for a given (p, n).
enum class ProvenStatus { ProvenNLe5, ProvenOddRange, Open };

std::string to_string(ProvenStatus s);

/// One row of the exponent table.
struct ExponentRow {
    std::uint64_t p;
    std::uint64_t n;
    std::uint64_t e;
    std::uint64_t f;
    ProvenStatus status;
};

/// All primes up to and including `bound`.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// p-adic valuation of the modulus of C_m: |(2m)!|_p, less one when the
/// modulus is halved (m odd, p = 2).
std::uint64_t modulus_val(std::uint64_t m, std::uint64_t p);

/// Does k satisfy C_m p-locally? Returns the flag and the valuation of
/// the product prod_{i=0}^{m-1} (k - i^2).
std::pair<bool, Valuation> satisfies_C(const mpq_class& k, std::uint64_t m,
                                       std::uint64_t p);

/// The full system C_1..C_n at one prime, with per-level evidence.
CongruenceVerdict fg_local_direct(const mpq_class& k, std::uint64_t n,
                                  std::uint64_t p);

/// The exponent e(p, n): the solution set of C_1..C_n in Z_(p) is
/// exactly D_p together with p^e Z_(p).
std::uint64_t e_exponent(std::uint64_t p, std::uint64_t n);

/// The exponent f(p, n) for which degree-p^f self maps are constructed.
std::uint64_t f_exponent(std::uint64_t p, std::uint64_t n);

/// Closed-form membership: in D_p, or valuation at least e(p, n).
bool fg_local_closed(const mpq_class& k, std::uint64_t n, std::uint64_t p);

/// Per-prime breakdown of the global membership test.
struct GlobalVerdict {
    mpq_class k;
    std::uint64_t n;
    std::vector<CongruenceVerdict> per_prime;  // one per prime <= 2n-1
    bool member;
};

/// Global membership with evidence: the congruences hold at every prime
/// p <= 2n-1. Throws NotPLocalError when k's denominator meets one of
/// those primes.
GlobalVerdict fg_global_verdict(const mpq_class& k, std::uint64_t n);

/// Global membership. For integer k the valuation route is cross-checked
/// against direct big-integer divisibility of the products by the moduli;
/// disagreement throws MathCheckError.
bool fg_global(const mpq_class& k, std::uint64_t n);

/// The residues r mod M whose entire class satisfies C_1..C_n. M must be
/// divisible by p^{modulus_val(m,p)} for every m <= n and prime p <= 2n-1
/// (the canonical M = (2n)! always qualifies); other M are rejected with
/// std::invalid_argument. Scans M classes; M > scan_guard throws
/// ScanGuardError.
std::vector<std::uint64_t> fg_residues(std::uint64_t n, const mpz_class& M,
                                       std::uint64_t scan_guard = kDefaultScanGuard,
                                       unsigned jobs = 1);

/// Smallest sound scan modulus for level n: prod over p <= 2n-1 of
/// p^{max_m modulus_val(m, p)}.
mpz_class minimal_sound_modulus(std::uint64_t n);

/// Exhaustive-scan oracle for e(p, n). Scans all residues mod p^c with
/// c = max_{m<=n} modulus_val(m, p), finds the minimal t such that every
/// class of valuation >= t solves the system, and asserts the full
/// closed-form set identity (solutions = D_p-compatible classes plus
/// p^t Z) along the way; any mismatch throws MathCheckError.
std::uint64_t e_exponent_bruteforce(std::uint64_t p, std::uint64_t n,
                                    std::uint64_t scan_guard = kDefaultScanGuard,
                                    unsigned jobs = 1);

ProvenStatus proven_status(std::uint64_t p, std::uint64_t n);

inline ExponentRow exponent_row(std::uint64_t p, std::uint64_t n) {
    return {p, n, e_exponent(p, n), f_exponent(p, n), proven_status(p, n)};
}

}  // namespace fg
