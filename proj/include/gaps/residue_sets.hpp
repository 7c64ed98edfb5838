#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaps/numeric.hpp"

namespace gaps::residue_sets {

/// A set of residues modulo 2^level, each in {1, ..., 2^level}, sorted.
struct ResidueSet {
    unsigned level = 0;
    std::vector<std::uint64_t> residues;

    std::uint64_t modulus() const { return std::uint64_t(1) << level; }
    bool contains(std::uint64_t r) const;
    bool subset_of(const ResidueSet& other) const;

    bool operator==(const ResidueSet&) const = default;
};

enum class SetFamily { S, T, U, V, W, R };

SetFamily parse_family(const std::string& name);
std::string family_name(SetFamily f);

/// Smallest level at which the family is defined (S:2, T:4, U:3, V:2, W:5, R:2).
unsigned min_level(SetFamily f);

/// pi_level: reduce x modulo 2^level into {1, ..., 2^level}; multiples
/// of 2^level map to 2^level, not 0.
std::uint64_t project(unsigned level, const Int& x);

/// tau(j) = 4j - 1.
inline Int tau(const Int& j) { return 4 * j - 1; }

/// Build S/T/U/V/W/R at the given level. U and W use their recursions,
/// V and R filter S by direct membership tests, T is the projected
/// image of tau(S).
ResidueSet build_set(SetFamily family, unsigned level);

struct AbcSets {
    ResidueSet A, B, C; // all at level ell + 2
};

/// A = T_{l+2}, B = pi_{l+2}(tau(U_l)), C = pi_{l+2}(tau(W_l)); level >= 5.
AbcSets abc_sets(unsigned level);

/// Apply tau to every residue and project to target_level.
ResidueSet project_tau(const ResidueSet& set, unsigned target_level);

/// Membership in S_level straight from the defining form 2^a * b with
/// a <= level-2 and b = 3 (mod 4); independent of build_set.
bool in_s_by_definition(unsigned level, std::uint64_t residue);

struct LemmaCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LemmaReport {
    unsigned level = 0;
    std::vector<LemmaCheck> checks;
    bool all_passed() const;
};

/// Exhaustively re-establish, at one level: the cardinality formulas,
/// the inclusion chains, the shift-closure of S, the exclusion
/// 3*2^l - 1 from T_{l+1}, the non-representability of S-classes, and
/// the disjointness of C and 13C. level >= 5.
LemmaReport verify_lemmas(unsigned level);

} // namespace gaps::residue_sets
