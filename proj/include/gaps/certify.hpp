#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaps/certificate.hpp"

namespace gaps::certify {

struct IndexResult {
    std::uint64_t j = 0;
    std::string witness_kind;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    bool ok = false;
    std::vector<IndexResult> per_index;
    std::vector<std::string> failures;
    // full_verify bookkeeping
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;

    std::string summary() const;
};

/// Adversarial check of a certificate, sharing no code with the
/// constructions: witness classes, odd exponents, exact divisibility
/// of the window elements, the defining congruence of y, and the
/// witness-versus-condition bookkeeping. Never factors anything;
/// big-integer work is divisibility only.
VerificationReport verify_certificate(const GapCertificate& cert);

/// Defense in depth: additionally re-check every window element not
/// exceeding budget with an independent oracle (two-squares criterion,
/// or the R_D divisor sum for discriminant certificates). Oversized
/// elements are reported as skipped, not failed.
VerificationReport full_verify(const GapCertificate& cert,
                               const Int& budget = Int(1'000'000'000'000));

} // namespace gaps::certify
