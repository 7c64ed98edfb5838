#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaps/numeric.hpp"

namespace gaps {

enum class CertKind { basic, improved, discriminant, sparse };

CertKind parse_cert_kind(const std::string& name);
std::string cert_kind_name(CertKind kind);

/// A congruence imposed on y: y = residue (mod p^(beta+1)).
struct PrimeCondition {
    Int p;
    unsigned beta = 0;
    Int residue;

    bool operator==(const PrimeCondition&) const = default;
};

/// Per-index proof that a window element is not representable. Either
/// a prime power p^gamma (gamma odd, p in the obstructing class)
/// exactly dividing the element, or -- for the improved construction's
/// condition (i) -- the dyadic decomposition 2^a * b of pi_l(j), from
/// which the verifier re-derives the obstruction directly.
struct Witness {
    enum class Kind { prime_power, dyadic };

    std::uint64_t j = 0;
    Kind kind = Kind::prime_power;
    Int p;
    unsigned gamma = 0;
    unsigned a = 0;      // dyadic only
    std::uint64_t b = 0; // dyadic only

    bool operator==(const Witness&) const = default;
};

/// Self-contained proof object for "no element of the window
/// {y+1, ..., y+k} (or {y+j^d}) is representable"; checkable by
/// divisibility alone, no factoring.
struct GapCertificate {
    CertKind kind = CertKind::basic;
    std::uint64_t k = 0;

    // improved
    unsigned level = 0;

    // discriminant
    Int D;
    Int r;
    Int L;
    unsigned t = 0;
    bool band_coverage_proven = true;

    // sparse
    std::uint64_t d = 0;
    std::uint64_t d_prime = 0;
    unsigned twos_exponent = 0;

    Int P;
    Int y;
    std::vector<PrimeCondition> conditions;
    std::vector<Witness> witnesses;

    /// The certified window element for index j.
    Int target(std::uint64_t j) const;

    bool operator==(const GapCertificate&) const = default;
};

/// Canonical JSON: stable field order, big integers as decimal
/// strings, no timestamps; byte-reproducible for identical inputs.
std::string to_canonical_json(const GapCertificate& cert);
GapCertificate certificate_from_json(const std::string& json_text);

} // namespace gaps
