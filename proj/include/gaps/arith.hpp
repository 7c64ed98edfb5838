#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "gaps/numeric.hpp"

namespace gaps::arith {

/// Kronecker symbol (m/n), the full multiplicative extension of the
/// Jacobi symbol to all integer denominators. Total except for
/// (0/0), which is rejected.
int kronecker(const Int& m, const Int& n);

/// All primes <= bound, sorted ascending. bound >= 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t bound);

/// Deterministic primality for word-sized n; Miller-Rabin backed for
/// larger inputs.
bool is_prime(const Int& n);

struct Factorization {
    Int n;
    std::vector<std::pair<Int, unsigned>> factors; // (p, e), p strictly increasing

    Int exponent_of(const Int& p) const;
};

struct FactorConfig {
    std::uint64_t trial_division_bound = 1'000'000;
    unsigned rho_max_iterations_log2 = 26; // per prime split attempt
};

/// Exact factorization of n >= 1; empty factor list for n = 1.
/// Throws ResourceError if the effort budget runs out.
Factorization factorize(const Int& n, const FactorConfig& cfg = {});

/// Number of factorize() invocations on this thread; used by tests to
/// assert that certificate verification never factors anything.
std::uint64_t factorize_call_count();

/// true iff p^gamma | n and p^(gamma+1) does not divide n.
/// Divisibility-only; never factors n.
bool exact_divides(const Int& p, unsigned gamma, const Int& n);

/// Solve x = residue (mod modulus) for all pairs simultaneously; moduli
/// must be pairwise coprime. Returns the unique solution in
/// {1, ..., M} with M the product of the moduli.
Int crt_solve(const std::vector<std::pair<Int, Int>>& congruences);

/// Modular inverse of a mod m, gcd(a, m) = 1 required.
Int mod_inverse(const Int& a, const Int& m);

/// base^exp mod m, exp >= 0.
Int pow_mod(Int base, Int exp, const Int& m);

/// Classical criterion: n is x^2 + y^2 iff every prime = 3 (mod 4)
/// divides n to an even power. 0 counts as representable.
/// Throws ResourceError above the direct-check bound.
bool is_sum_of_two_squares(const Int& n, const Int& direct_check_bound = Int(1'000'000'000'000));

/// Independent oracle: exhaustive x <= sqrt(n) scan. Intended for
/// self-tests with n <= 1e8.
bool is_sum_of_two_squares_scan(std::uint64_t n);

/// R_D(n) = sum over divisors l of n of (D/l), computed
/// multiplicatively from the factorization of n.
Int representation_count(const Int& D, const Int& n, const FactorConfig& cfg = {});

/// Euler totient.
Int euler_phi(const Int& n, const FactorConfig& cfg = {});

struct PrimePowerBound {
    std::uint64_t bound = 0;
    std::map<std::uint64_t, unsigned> entries; // p -> beta(p), max p^beta <= bound
};

/// beta(p) for every prime p <= bound accepted by class_filter.
PrimePowerBound prime_power_bounds(std::uint64_t bound,
                                   const std::function<bool(std::uint64_t)>& class_filter);

/// Bitset over [0, limit] marking integers expressible as x^2 + y^2,
/// filled by the direct double loop over x, y.
class TwoSquaresSieve {
public:
    explicit TwoSquaresSieve(std::uint64_t limit);

    bool representable(std::uint64_t n) const {
        return (bits_[n >> 6] >> (n & 63)) & 1;
    }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;
};

} // namespace gaps::arith
