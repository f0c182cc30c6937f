#include "fgdeg/ktheory.hpp"

#include <sstream>

namespace fg {

bool TruncPoly::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("TruncPoly: level mismatch");
    std::uint64_t n = a.level();
    TruncPoly out(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (a.coeffs_[i - 1] == 0)
            continue;
        for (std::uint64_t j = 1; i + j <= n; ++j)
            out.coeffs_[i + j - 1] += a.coeffs_[i - 1] * b.coeffs_[j - 1];
    }
    return out;
}

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("TruncPoly: level mismatch");
    TruncPoly out = a;
    for (std::uint64_t j = 0; j < b.level(); ++j)
        out.coeffs_[j] += b.coeffs_[j];
    return out;
}

TruncPoly& TruncPoly::operator*=(const mpq_class& s) {
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

std::string TruncPoly::to_string(const char* var) const {
    std::ostringstream os;
    bool first = true;
    for (std::uint64_t j = 1; j <= level(); ++j) {
        const mpq_class& c = coeffs_[j - 1];
        if (c == 0)
            continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
            os << mag;
            if (mag.get_den() != 1)
                os << " ";  // "1/6 x^2" but "6x^2"
        }
        os << var;
        if (j > 1)
            os << "^" << j;
    }
    if (first)
        os << "0";
    return os.str();
}

mpq_class adams_coeff(long l, std::uint64_t j) {
    if (j < 1)
        throw std::invalid_argument("adams_coeff: j >= 1 required");
    mpz_class lsq = mpz_class(l) * l;
    mpz_class num = 2;
    for (std::uint64_t i = 0; i < j; ++i)
        num *= lsq - mpz_class(static_cast<unsigned long>(i * i));
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(2 * j));
    mpq_class c(num, den);
    c.canonicalize();
    return c;
}

TruncPoly psi(long l, std::uint64_t n) {
    TruncPoly out(n);
    for (std::uint64_t j = 1; j <= n; ++j)
        out.coeff(j) = adams_coeff(l, j);
    return out;
}

TruncPoly substitute(const TruncPoly& g, const TruncPoly& f) {
    if (g.level() != f.level())
        throw std::invalid_argument("substitute: level mismatch");
    std::uint64_t n = g.level();
    TruncPoly out(n);
    TruncPoly power = f;  // f^j
    for (std::uint64_t j = 1; j <= n; ++j) {
        if (g.coeff(j) != 0) {
            TruncPoly term = power;
            term *= g.coeff(j);
            out = out + term;
        }
        if (j < n)
            power = power * f;
    }
    return out;
}

namespace {

// Powers f^1..f^n, truncated.
std::vector<TruncPoly> truncated_powers(const TruncPoly& f) {
    std::vector<TruncPoly> pow;
    pow.reserve(f.level());
    pow.push_back(f);
    for (std::uint64_t j = 2; j <= f.level(); ++j)
        pow.push_back(pow.back() * f);
    return pow;
}

}  // namespace

TruncPoly eigenvector_v1(long l, std::uint64_t n) {
    if (l < 2)
        throw std::invalid_argument("eigenvector_v1: l >= 2 required");
    TruncPoly v(n);
    v.coeff(1) = 1;
    if (n == 1)
        return v;
    auto pow = truncated_powers(psi(l, n));
    mpz_class lsq = mpz_class(l) * l;
    // The action matrix is triangular with diagonal l^(2j); solve
    // (action - l^2) v = 0 row by row.
    mpz_class diag = lsq;  // l^(2s)
    for (std::uint64_t s = 2; s <= n; ++s) {
        diag *= lsq;
        mpq_class rhs = 0;
        for (std::uint64_t j = 1; j < s; ++j)
            rhs += v.coeff(j) * pow[j - 1].coeff(s);
        v.coeff(s) = rhs / mpq_class(lsq - diag);
        v.coeff(s).canonicalize();
    }
    return v;
}

TruncPoly phi_endomorphism(const mpq_class& k, std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("phi_endomorphism: n >= 1 required");
    TruncPoly v = eigenvector_v1(2, n);
    auto vpow = truncated_powers(v);

    // Change of basis x = sum t_j v^j; v^j is x^j plus higher order, so
    // the system is triangular with unit diagonal.
    std::vector<mpq_class> t(n);
    t[0] = 1;
    for (std::uint64_t s = 2; s <= n; ++s) {
        mpq_class acc = 0;
        for (std::uint64_t j = 1; j < s; ++j)
            acc += t[j - 1] * vpow[j - 1].coeff(s);
        t[s - 1] = -acc;
    }

    // phi(x) = sum t_j k^j v^j: the eigenbasis scales by powers of k.
    TruncPoly phi(n);
    mpq_class kpow = 1;
    for (std::uint64_t j = 1; j <= n; ++j) {
        kpow *= k;
        if (t[j - 1] == 0)
            continue;
        TruncPoly term = vpow[j - 1];
        term *= t[j - 1] * kpow;
        phi = phi + term;
    }

    if (phi.coeff(1) != k)
        throw MathCheckError("phi_endomorphism: leading coefficient is not k");
    for (long l : {2L, 3L}) {
        TruncPoly psil = psi(l, n);
        if (substitute(psil, phi) != substitute(phi, psil))
            throw MathCheckError("phi_endomorphism: does not commute with psi^" +
                                 std::to_string(l));
    }
    return phi;
}

bool symplectic_parity_ok(const TruncPoly& f) {
    if (!f.is_integral())
        throw std::invalid_argument("symplectic_parity_ok: non-integral coefficient");
    for (std::uint64_t j = 2; j <= f.level(); j += 2)
        if (mpz_odd_p(f.coeff(j).get_num().get_mpz_t()))
            return false;
    return true;
}

EndoVerdict fg_ktheory(const mpq_class& k, std::uint64_t n) {
    TruncPoly phi = phi_endomorphism(k, n);
    bool integral = phi.is_integral();
    bool parity = integral && symplectic_parity_ok(phi);
    return {k, n, std::move(phi), integral, parity, integral && parity};
}

TruncPoly psi_ko(long l, std::uint64_t n) {
    TruncPoly out(n);
    mpq_class scale = 1;  // 2^(j-1)
    for (std::uint64_t j = 1; j <= n; ++j) {
        out.coeff(j) = adams_coeff(l, j) * scale;
        out.coeff(j).canonicalize();
        scale *= 2;
    }
    return out;
}

}  // namespace fg
