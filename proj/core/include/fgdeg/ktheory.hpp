#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fgdeg/congruence.hpp"

namespace fg {

/// An element of the reduced truncated polynomial ring: exact rational
/// coefficients b_1..b_n of sum b_j x^j in Q[x]/x^(n+1). No constant term.
class TruncPoly {
public:
    explicit TruncPoly(std::uint64_t level)
        : coeffs_(level, mpq_class(0)) {}
    explicit TruncPoly(std::vector<mpq_class> coeffs)
        : coeffs_(std::move(coeffs)) {}

    std::uint64_t level() const { return coeffs_.size(); }

    /// Coefficient of x^j, 1-based.
    const mpq_class& coeff(std::uint64_t j) const { return coeffs_.at(j - 1); }
    mpq_class& coeff(std::uint64_t j) { return coeffs_.at(j - 1); }

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_integral() const;

    friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

    /// Product truncated past x^level (levels must match).
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
    TruncPoly& operator*=(const mpq_class& s);

    /// "9x + 6x^2" style rendering, exact fractions, zero terms dropped.
    std::string to_string(const char* var = "x") const;

private:
    std::vector<mpq_class> coeffs_;
};

/// Coefficient of x^j in psi^l(x): 2 prod_{i=0}^{j-1} (l^2 - i^2) / (2j)!.
mpq_class adams_coeff(long l, std::uint64_t j);

/// The Adams operation psi^l on the degree-n truncated ring: psi^l(x) as
/// a polynomial l^2 x + ... .
TruncPoly psi(long l, std::uint64_t n);

/// Ring-endomorphism action: substitute f for x in g, i.e. sum g_j f^j
/// truncated past x^n. Levels must match.
TruncPoly substitute(const TruncPoly& g, const TruncPoly& f);

/// The unique v = x + a_2 x^2 + ... with psi^l-action v -> l^2 v,
/// computed by triangular back-substitution. Requires l >= 2 (distinct
/// eigenvalues); independent of l, which callers may verify.
TruncPoly eigenvector_v1(long l, std::uint64_t n);

/// The unique rational polynomial phi(x) = k x + ... whose induced ring
/// map commutes with all Adams operations. Built on the eigenbasis
/// {v^j} of psi^2 (v^j -> k^j v^j); commutation with psi^2 and psi^3 is
/// asserted on the result (MathCheckError on failure).
TruncPoly phi_endomorphism(const mpq_class& k, std::uint64_t n);

/// Symplectic-image test: every even-index coefficient is an even
/// integer. All coefficients must be integers (std::invalid_argument).
bool symplectic_parity_ok(const TruncPoly& f);

/// Decision record for the K-theory membership criterion.
struct EndoVerdict {
    mpq_class k;
    std::uint64_t n;
    TruncPoly phi;
    bool integral;
    bool parity_ok;
    bool in_FG;  // integral && parity_ok
};

/// The K-theory membership criterion: k is a realizable-degree candidate
/// at level n iff phi(x) is integral and passes the symplectic parity
/// test. For integer k this coincides with fg_global(k, n).
EndoVerdict fg_ktheory(const mpq_class& k, std::uint64_t n);

/// The Adams operation on KO coefficients in the generator y, obtained
/// by transport along x -> 2y: coefficient of y^j is c_j(l) 2^(j-1).
TruncPoly psi_ko(long l, std::uint64_t n);

}  // namespace fg
