#pragma once

#include <cstdint>
#include <vector>

#include "gaps/certificate.hpp"
#include "gaps/numeric.hpp"

namespace gaps::constructions {

/// Richards's construction: P = prod of p^(beta(p)+1) over primes
/// p <= 4k with p = 3 (mod 4), and y in {1,...,P} with 4y = -1 (mod P).
GapCertificate richards_basic(std::uint64_t k);

/// The refined construction: primes in the three upper bands are
/// omitted from P when their class mod 2^(level+2) lies in C, B, or A
/// respectively; y additionally satisfies 2^level | y. level >= 5.
GapCertificate improved_two_squares(std::uint64_t k, unsigned level);

/// D = 1 (mod 4) squarefree, or D = 0 (mod 4) with D/4 squarefree and
/// D/4 = 2 or 3 (mod 4). D must be nonzero and != 1.
bool validate_fundamental_discriminant(const Int& D);

/// Smallest r in {1, ..., |D|} with kronecker(D, r) = -1.
Int choose_r(const Int& D);

/// Derived data for a validated fundamental discriminant.
struct DiscriminantContext {
    Int D;
    Int r;
    std::uint64_t t = 0; // phi(|D|)
    Int L;               // |D| * (k+1)
    std::vector<std::uint64_t> ell_seq;          // l_1 < ... < l_t, coprime to D
    std::vector<std::vector<std::uint64_t>> T_chain; // T_1 c ... c T_t, residues mod |D|
};

DiscriminantContext make_discriminant_context(const Int& D, std::uint64_t k);

/// Gap construction for any fundamental discriminant: band-filtered
/// product P and y with |D|y = r (mod P). When L/l_t < L^(1/3) the
/// certificate is flagged band_coverage_proven = false and stands or
/// falls with verification.
GapCertificate general_discriminant(const Int& D, std::uint64_t k);

/// Gaps along the sparse sequence y + j^d with d = 2^r * d', d' odd:
/// bound 4kd', y with (4d')^d y = -1 (mod P). d = 1 reproduces
/// richards_basic exactly.
GapCertificate sparse_powers(std::uint64_t k, std::uint64_t d);

/// Empirical check of the identity
/// gcd(((4d'j)^d - 1)/(4d'j - 1), 4d'j - 1) = 1 with d = 2^r * d'.
bool gcd_lemma_check(std::uint64_t d_prime, unsigned twos_exponent, std::uint64_t j);

} // namespace gaps::constructions
