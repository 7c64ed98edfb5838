#include "gaps/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "gaps/arith.hpp"
#include "gaps/constructions.hpp"
#include "gaps/residue_sets.hpp"

namespace gaps::analysis {

ConstantPartition four_band_partition() {
    ConstantPartition p;
    p.breakpoints = {Rat(4, 13), Rat(4, 9), Rat(4, 5), Rat(4)};
    p.densities = {Rat(1), Rat(15, 16), Rat(3, 4), Rat(1, 2)};
    return p;
}

ConstantPartition two_band_partition() {
    ConstantPartition p;
    p.breakpoints = {Rat(4, 5), Rat(4)};
    p.densities = {Rat(1), Rat(3, 4)};
    return p;
}

ConstantPartition single_band_partition() {
    ConstantPartition p;
    p.breakpoints = {Rat(4)};
    p.densities = {Rat(1)};
    return p;
}

Rat alpha_constant(const ConstantPartition& partition) {
    if (partition.breakpoints.size() != partition.densities.size() ||
        partition.breakpoints.empty())
        throw std::invalid_argument("alpha_constant: malformed partition");
    Rat alpha = 0;
    Rat prev = 0;
    for (std::size_t i = 0; i < partition.breakpoints.size(); ++i) {
        const Rat& b = partition.breakpoints[i];
        if (b <= prev) throw std::invalid_argument("alpha_constant: breakpoints not increasing");
        alpha += partition.densities[i] * (b - prev);
        prev = b;
    }
    return partition.class_factor * alpha;
}

Rat gap_bound(const ConstantPartition& partition) {
    return Rat(1) / (2 * alpha_constant(partition));
}

Rat theorem2_rational_factor(const Int& D) {
    Int dabs = abs(D);
    return Rat(arith::euler_phi(dabs), 2 * dabs);
}

double theorem2_constant(const Int& D) {
    Int dabs = abs(D);
    double phi = static_cast<double>(arith::euler_phi(dabs));
    return phi / (2 * static_cast<double>(dabs) * (1 + std::log(phi)));
}

DensityRow density_table(unsigned level) {
    if (level < 5) throw std::invalid_argument("density_table: level must be >= 5");
    auto abc = residue_sets::abc_sets(level);
    DensityRow row;
    row.level = level;
    row.count_a = abc.A.residues.size();
    row.count_b = abc.B.residues.size();
    row.count_c = abc.C.residues.size();
    row.phi = Int(1) << (level + 1); // phi(2^(l+2))
    row.ratio_a = Rat(row.count_a, row.phi);
    row.ratio_b = Rat(row.count_b, row.phi);
    row.ratio_c = Rat(row.count_c, row.phi);
    return row;
}

std::vector<GapRecord> gap_records(std::uint64_t N) {
    arith::TwoSquaresSieve sieve(N);
    std::vector<GapRecord> records;
    std::uint64_t prev = 2; // records start from s_n >= 2
    std::uint64_t best_gap = 0;
    for (std::uint64_t n = prev + 1; n <= N; ++n) {
        if (!sieve.representable(n)) continue;
        std::uint64_t gap = n - prev;
        if (gap > best_gap) {
            best_gap = gap;
            records.push_back({prev, n, gap,
                               static_cast<double>(gap) / std::log(static_cast<double>(prev))});
        }
        prev = n;
    }
    return records;
}

std::uint64_t minimal_y_bruteforce(std::uint64_t k, std::uint64_t sieve_limit) {
    arith::TwoSquaresSieve sieve(sieve_limit);
    std::uint64_t run = 0;
    for (std::uint64_t n = 1; n <= sieve_limit; ++n) {
        if (sieve.representable(n)) {
            run = 0;
            continue;
        }
        if (++run == k) return n - k;
    }
    throw ResourceError("minimal_y_bruteforce: no window of length " + std::to_string(k) +
                        " below " + std::to_string(sieve_limit));
}

double log_big(const Int& n) {
    if (n <= 0) throw std::invalid_argument("log_big: n must be positive");
    unsigned bits = msb(n) + 1;
    if (bits <= 62) return std::log(static_cast<double>(n));
    Int top = n >> (bits - 62);
    return std::log(static_cast<double>(top)) + (bits - 62) * std::log(2.0);
}

std::vector<ComparisonRow> construction_comparison(const std::vector<std::uint64_t>& k_values,
                                                   unsigned level) {
    std::vector<ComparisonRow> rows;
    for (std::uint64_t k : k_values) {
        auto basic = constructions::richards_basic(k);
        auto improved = constructions::improved_two_squares(k, level);
        ComparisonRow row;
        row.k = k;
        row.log_p_basic = log_big(basic.P);
        row.log_p_improved = log_big(improved.P);
        row.ratio_basic = k / row.log_p_basic;
        row.ratio_improved = k / row.log_p_improved;
        rows.push_back(row);
    }
    return rows;
}

} // namespace gaps::analysis
