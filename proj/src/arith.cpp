#include "gaps/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/integer/common_factor.hpp>

namespace gaps::arith {

namespace {

int mod8(const Int& x) { return static_cast<int>(mod_nonneg(x, 8)); }
int mod4(const Int& x) { return static_cast<int>(mod_nonneg(x, 4)); }

thread_local std::uint64_t g_factorize_calls = 0;

} // namespace

int kronecker(const Int& m, const Int& n) {
    if (m == 0 && n == 0)
        throw std::invalid_argument("kronecker: (0/0) undefined");
    Int a = m, b = n;
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a % 2 == 0) && (b % 2 == 0)) return 0;

    int result = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) result = -result;
    }
    unsigned v = 0;
    while (b % 2 == 0) {
        b >>= 1;
        ++v;
    }
    if (v & 1) {
        // (a/2) via a mod 8; a is odd here
        int a8 = mod8(a);
        if (a8 == 3 || a8 == 5) result = -result;
    }
    // b odd, b >= 1; run Jacobi with quadratic reciprocity
    a = mod_nonneg(a, b);
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            int b8 = static_cast<int>(b % 8);
            if (b8 == 3 || b8 == 5) result = -result;
        }
        if (mod4(a) == 3 && b % 4 == 3) result = -result;
        Int t = b % a;
        b = a;
        a = t;
    }
    return b == 1 ? result : 0;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
    if (bound < 2) throw std::invalid_argument("sieve_primes: bound must be >= 2");
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

Int pow_mod(Int base, Int exp, const Int& mod) {
    Int result = 1;
    base = mod_nonneg(base, mod);
    while (exp > 0) {
        if (exp % 2 == 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic for n < 3.3e24 with these twelve bases
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, Int(a))) return false;
    return true;
}

Int Factorization::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

namespace {

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
// factor of composite odd n, or 0 on budget exhaustion.
Int pollard_rho(const Int& n, std::uint64_t max_iter, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        Int x = mod_nonneg(Int(rng()), n - 2) + 2;
        Int c = mod_nonneg(Int(rng()), n - 1) + 1;
        Int y = x, d = 1;
        std::uint64_t iter = 0;
        Int saved_y = y;
        std::uint64_t power = 1, lam = 0;
        while (d == 1) {
            if (++iter > max_iter) return 0;
            if (lam == power) {
                saved_y = y;
                power <<= 1;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            d = boost::integer::gcd(Int(abs(saved_y - y)), n);
        }
        if (d != n) return d;
        // cycle collapsed; retry with new parameters
    }
}

void factor_recursive(const Int& n, std::vector<Int>& out, const FactorConfig& cfg) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n, std::uint64_t(1) << cfg.rho_max_iterations_log2, out.size() + 12345);
    if (d == 0)
        throw ResourceError("factorize: effort bound exceeded on " + n.str() +
                            "; use certificate verification instead");
    factor_recursive(d, out, cfg);
    factor_recursive(n / d, out, cfg);
}

} // namespace

Factorization factorize(const Int& n, const FactorConfig& cfg) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    ++g_factorize_calls;
    Factorization result;
    result.n = n;
    Int rest = n;
    for (std::uint64_t p = 2; p <= cfg.trial_division_bound && Int(p) * p <= rest; p == 2 ? p = 3 : p += 2) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        result.factors.emplace_back(Int(p), e);
    }
    if (rest > 1) {
        if (rest <= Int(cfg.trial_division_bound) * cfg.trial_division_bound) {
            // remainder below trial bound squared is prime
            result.factors.emplace_back(rest, 1);
        } else {
            std::vector<Int> primes;
            factor_recursive(rest, primes, cfg);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                result.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
                i = j;
            }
        }
    }
    return result;
}

std::uint64_t factorize_call_count() { return g_factorize_calls; }

bool exact_divides(const Int& p, unsigned gamma, const Int& n) {
    if (n < 1) throw std::invalid_argument("exact_divides: n must be >= 1");
    Int pg = pow_int(p, gamma);
    if (n % pg != 0) return false;
    return (n / pg) % p != 0;
}

Int crt_solve(const std::vector<std::pair<Int, Int>>& congruences) {
    if (congruences.empty())
        throw std::invalid_argument("crt_solve: no congruences");
    Int x = mod_nonneg(congruences[0].first, congruences[0].second);
    Int m = congruences[0].second;
    for (std::size_t i = 1; i < congruences.size(); ++i) {
        const auto& [r, mi] = congruences[i];
        Int g = boost::integer::gcd(m, mi);
        if (g != 1)
            throw std::invalid_argument("crt_solve: moduli not coprime (gcd " + g.str() +
                                        " between accumulated modulus and modulus #" +
                                        std::to_string(i) + " = " + mi.str() + ")");
        // x + m*s = r (mod mi)
        Int s = mod_nonneg((r - x) * mod_inverse(m, mi), mi);
        x += m * s;
        m *= mi;
    }
    return mod_one_based(x, m);
}

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_nonneg(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_nonneg(old_s, m);
}

bool is_sum_of_two_squares(const Int& n, const Int& direct_check_bound) {
    if (n < 0) throw std::invalid_argument("is_sum_of_two_squares: n must be >= 0");
    if (n > direct_check_bound)
        throw ResourceError("is_sum_of_two_squares: " + n.str() +
                            " exceeds the direct-check bound; use certificates");
    if (n <= 1) return true;
    Factorization f = factorize(n);
    for (const auto& [p, e] : f.factors)
        if (p % 4 == 3 && (e & 1)) return false;
    return true;
}

bool is_sum_of_two_squares_scan(std::uint64_t n) {
    for (std::uint64_t x = 0; x * x * 2 <= n; ++x) {
        std::uint64_t rest = n - x * x;
        auto y = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rest)));
        for (std::uint64_t yy = y > 1 ? y - 1 : 0; yy <= y + 1; ++yy)
            if (yy * yy == rest) return true;
    }
    return false;
}

Int representation_count(const Int& D, const Int& n, const FactorConfig& cfg) {
    if (n < 1) throw std::invalid_argument("representation_count: n must be >= 1");
    Factorization f = factorize(n, cfg);
    Int total = 1;
    for (const auto& [p, e] : f.factors) {
        int chi = kronecker(D, p);
        // sum of chi^i for i = 0..e
        Int local = 0;
        int power = 1;
        for (unsigned i = 0; i <= e; ++i) {
            local += power;
            power *= chi;
        }
        total *= local;
    }
    return total;
}

Int euler_phi(const Int& n, const FactorConfig& cfg) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    Factorization f = factorize(n, cfg);
    Int phi = n;
    for (const auto& [p, e] : f.factors) {
        phi /= p;
        phi *= p - 1;
    }
    return phi;
}

PrimePowerBound prime_power_bounds(std::uint64_t bound,
                                   const std::function<bool(std::uint64_t)>& class_filter) {
    if (bound < 2) throw std::invalid_argument("prime_power_bounds: bound must be >= 2");
    PrimePowerBound result;
    result.bound = bound;
    for (std::uint64_t p : sieve_primes(bound)) {
        if (!class_filter(p)) continue;
        unsigned beta = 0;
        Int pw = p;
        while (pw <= bound) {
            ++beta;
            pw *= p;
        }
        result.entries.emplace(p, beta);
    }
    return result;
}

TwoSquaresSieve::TwoSquaresSieve(std::uint64_t limit)
    : limit_(limit), bits_((limit >> 6) + 1, 0) {
    for (std::uint64_t x = 0; x * x <= limit; ++x) {
        std::uint64_t xx = x * x;
        for (std::uint64_t y = x; xx + y * y <= limit; ++y) {
            std::uint64_t s = xx + y * y;
            bits_[s >> 6] |= std::uint64_t(1) << (s & 63);
        }
    }
}

} // namespace gaps::arith
