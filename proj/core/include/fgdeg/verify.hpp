#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgdeg/congruence.hpp"

namespace fg {

struct VerifyFailure {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct VerifySkip {
    std::string what;
    std::string reason;
};

/// Result of one verification suite run.
struct VerifyOutcome {
    std::string suite;
    std::uint64_t cases_run = 0;
    std::vector<VerifyFailure> failures;
    std::vector<VerifySkip> skipped;
    bool ok() const { return failures.empty(); }
};

struct VerifyConfig {
    std::uint64_t scan_guard = kDefaultScanGuard;
    unsigned jobs = 1;
};

/// Exponent suite: closed-form e(p,n) against the exhaustive scan oracle
/// (with the full set-identity assertion), e <= f on the wide grid, and
/// monotonicity of e in n.
VerifyOutcome verify_exponent(const VerifyConfig& cfg = {});

/// Congruence suite: closed form vs direct congruences on sampled k,
/// monotonicity in n, odd squares, residue well-definedness, and the
/// factorial-valuation identity.
VerifyOutcome verify_congruence(const VerifyConfig& cfg = {});

/// K-theory suite: Adams semigroup and commutation laws, coefficient
/// integrality, eigenvector independence of l, phi specializing to psi,
/// degree multiplicativity, KO transport, and the cross-oracle against
/// the congruence route.
VerifyOutcome verify_ktheory(const VerifyConfig& cfg = {});

std::vector<VerifyOutcome> verify_all(const VerifyConfig& cfg = {});

}  // namespace fg
