#pragma once

#include <cstdint>
#include <vector>

#include "gaps/numeric.hpp"

namespace gaps::analysis {

/// A band decomposition of the prime range with per-band densities;
/// evaluates to the exponent constant alpha and the gap bound 1/(2*alpha).
struct ConstantPartition {
    std::vector<Rat> breakpoints; // strictly increasing, positive
    std::vector<Rat> densities;   // same length, each in [0, 1]
    Rat class_factor = Rat(1, 2); // density of the class p = 3 (mod 4)
};

/// The paper-scale partitions.
ConstantPartition four_band_partition();   // alpha = 449/390, bound 195/449
ConstantPartition two_band_partition();    // bound 5/16
ConstantPartition single_band_partition(); // bound 1/4

Rat alpha_constant(const ConstantPartition& partition);

/// 1 / (2 * alpha): the lower bound on the limsup gap ratio.
Rat gap_bound(const ConstantPartition& partition);

/// phi(|D|) / (2|D| (1 + ln(phi(|D|)))).
double theorem2_constant(const Int& D);

/// The exact rational factor phi(|D|) / (2|D|).
Rat theorem2_rational_factor(const Int& D);

struct DensityRow {
    unsigned level = 0;       // the l of A, B, C at level l+2
    std::uint64_t count_a = 0, count_b = 0, count_c = 0;
    Int phi;                  // phi(2^(l+2)) = 2^(l+1)
    Rat ratio_a, ratio_b, ratio_c;
};

DensityRow density_table(unsigned level);

struct GapRecord {
    std::uint64_t s_n = 0;
    std::uint64_t s_next = 0;
    std::uint64_t gap = 0;
    double ratio = 0; // gap / ln(s_n)
};

/// Running gap records over the sums of two squares up to N;
/// records start from s_n >= 2.
std::vector<GapRecord> gap_records(std::uint64_t N);

/// Smallest y >= 0 such that none of y+1, ..., y+k is a sum of two
/// squares, by direct sieve scan. Throws ResourceError if no such y
/// exists below sieve_limit.
std::uint64_t minimal_y_bruteforce(std::uint64_t k, std::uint64_t sieve_limit = 10'000'000);

/// log of a positive big integer: bit length times log 2 with a
/// mantissa correction from the leading bits.
double log_big(const Int& n);

struct ComparisonRow {
    std::uint64_t k = 0;
    double log_p_basic = 0;
    double log_p_improved = 0;
    double ratio_basic = 0;    // k / log P
    double ratio_improved = 0;
};

std::vector<ComparisonRow> construction_comparison(const std::vector<std::uint64_t>& k_values,
                                                   unsigned level);

} // namespace gaps::analysis
