#include "doctest.h"

#include <random>

#include "gaps/arith.hpp"

using namespace gaps;
using namespace gaps::arith;

namespace {

// Brute-force Jacobi symbol for odd positive n: Legendre by
// quadratic-residue scan at each prime factor.
int legendre_scan(std::int64_t a, std::int64_t p) {
    std::int64_t am = ((a % p) + p) % p;
    if (am == 0) return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == am) return 1;
    return -1;
}

int jacobi_bruteforce(std::int64_t a, std::int64_t n) {
    REQUIRE(n > 0);
    REQUIRE(n % 2 == 1);
    int result = 1;
    for (std::int64_t p = 3; p <= n; p += 2) {
        if (n % p != 0) continue;
        bool prime = true;
        for (std::int64_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        while (n % p == 0) {
            result *= legendre_scan(a, p);
            n /= p;
        }
    }
    return result;
}

} // namespace

TEST_CASE("kronecker base cases") {
    CHECK(kronecker(5, 1) == 1);
    // x^2 = -4 (mod 3) has no solution
    CHECK(kronecker(-4, 3) == -1);
    // 5 = -3 (mod 8)
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(-3, -1) == -1);
    CHECK(kronecker(3, -1) == 1);
    CHECK(kronecker(0, 3) == 0);
    CHECK(kronecker(0, 1) == 1);
    CHECK(kronecker(6, 2) == 0);
    CHECK_THROWS_AS(kronecker(0, 0), std::invalid_argument);
}

TEST_CASE("kronecker agrees with brute-force Jacobi on odd positive n") {
    for (std::int64_t n = 1; n <= 61; n += 2)
        for (std::int64_t a = -30; a <= 30; ++a)
            CHECK(kronecker(a, n) == jacobi_bruteforce(a, n));
}

TEST_CASE("kronecker multiplicativity in the denominator") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-500, 500);
    int tested = 0;
    while (tested < 10'000) {
        std::int64_t m = dist(rng), n1 = dist(rng), n2 = dist(rng);
        if (n1 == 0 || n2 == 0) continue;
        if (m == 0 && (n1 * n2 == 0)) continue;
        CHECK(kronecker(m, Int(n1) * n2) == kronecker(m, n1) * kronecker(m, n2));
        ++tested;
    }
}

TEST_CASE("kronecker multiplicativity in the numerator") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> dist(-500, 500);
    for (int i = 0; i < 5'000; ++i) {
        std::int64_t m1 = dist(rng), m2 = dist(rng), n = dist(rng);
        if (n == 0) continue;
        CHECK(kronecker(Int(m1) * m2, n) == kronecker(m1, n) * kronecker(m2, n));
    }
}

TEST_CASE("kronecker periodicity for m = 0 or 1 (mod 4)") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::int64_t> ndist(-10'000, 10'000);
    std::uniform_int_distribution<std::int64_t> kdist(-50, 50);
    for (std::int64_t m = -200; m <= 200; ++m) {
        if (m == 0) continue;
        std::int64_t mm = ((m % 4) + 4) % 4;
        if (mm != 0 && mm != 1) continue;
        for (int i = 0; i < 25; ++i) {
            std::int64_t n = ndist(rng), k = kdist(rng);
            if (n == 0 || n + k * m == 0) continue;
            CHECK(kronecker(m, n + k * m) == kronecker(m, n));
        }
    }
}

TEST_CASE("sieve_primes") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
    auto p30 = sieve_primes(30);
    CHECK(p30.size() == 10);
    CHECK(p30.back() == 29);
    // trial-division oracle
    for (std::uint64_t n = 2; n <= 30; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        CHECK(std::binary_search(p30.begin(), p30.end(), n) == prime);
    }
}

TEST_CASE("factorize") {
    auto f = factorize(12);
    CHECK(f.factors == std::vector<std::pair<Int, unsigned>>{{2, 2}, {3, 1}});
    CHECK(factorize(441).factors == std::vector<std::pair<Int, unsigned>>{{3, 2}, {7, 2}});
    CHECK(factorize(1).factors.empty());
    // large semiprime beyond trial division exercises the rho path
    Int p("1000003"), q("1000033");
    auto big = factorize(p * q);
    CHECK(big.factors == std::vector<std::pair<Int, unsigned>>{{p, 1}, {q, 1}});
}

TEST_CASE("exact_divides") {
    CHECK(exact_divides(3, 1, 21));
    CHECK_FALSE(exact_divides(3, 1, 9));
    CHECK(exact_divides(7, 2, 441));
    CHECK_FALSE(exact_divides(7, 1, 441));
    CHECK_FALSE(exact_divides(5, 1, 441));
}

TEST_CASE("exact_divides agrees with factorization exponents") {
    for (std::uint64_t n = 1; n <= 2'000; ++n) {
        auto f = factorize(n);
        for (std::uint64_t p : {2, 3, 5, 7, 11}) {
            Int e = f.exponent_of(p);
            for (unsigned g = 1; g <= 4; ++g)
                CHECK(exact_divides(p, g, n) == (e == g));
        }
    }
}

TEST_CASE("crt_solve") {
    CHECK(crt_solve({{2, 9}}) == 2);
    CHECK(crt_solve({{2, 9}, {5, 49}}) == 299);
    CHECK(crt_solve({{0, 4}, {1, 3}}) == 4);
    // multiples of M map to M, not 0
    CHECK(crt_solve({{0, 4}, {0, 3}}) == 12);
    CHECK_THROWS_AS(crt_solve({{1, 6}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("crt_solve result satisfies every congruence and lies in {1..M}") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::pair<Int, Int>> sys;
        Int M = 1;
        for (Int m : {Int(4), Int(9), Int(25), Int(7), Int(11)}) {
            sys.emplace_back(Int(rng() % 1000), m);
            M *= m;
        }
        Int y = crt_solve(sys);
        CHECK(y >= 1);
        CHECK(y <= M);
        for (const auto& [r, m] : sys) CHECK(mod_nonneg(y, m) == mod_nonneg(r, m));
    }
}

TEST_CASE("is_sum_of_two_squares") {
    CHECK(is_sum_of_two_squares(8));
    CHECK(is_sum_of_two_squares(0));
    CHECK_FALSE(is_sum_of_two_squares(21));
    CHECK_THROWS_AS(is_sum_of_two_squares(Int("1000000000000000000000")), ResourceError);
}

TEST_CASE("two-squares criterion matches exhaustive scan") {
    for (std::uint64_t n = 0; n <= 20'000; ++n)
        CHECK(is_sum_of_two_squares(n) == is_sum_of_two_squares_scan(n));
}

TEST_CASE("two-squares criterion matches sieve up to 1e6") {
    TwoSquaresSieve sieve(1'000'000);
    for (std::uint64_t n = 0; n <= 1'000'000; ++n)
        CHECK(is_sum_of_two_squares(n) == sieve.representable(n));
}

TEST_CASE("representation_count") {
    CHECK(representation_count(-4, 5) == 2);
    CHECK(representation_count(-4, 3) == 0);
    CHECK(representation_count(-4, 1) == 1);
}

TEST_CASE("representation_count equals the direct divisor sum") {
    for (Int D : {Int(-4), Int(-3), Int(5), Int(8)}) {
        for (std::uint64_t n = 1; n <= 500; ++n) {
            Int direct = 0;
            for (std::uint64_t l = 1; l <= n; ++l)
                if (n % l == 0) direct += kronecker(D, l);
            CHECK(representation_count(D, n) == direct);
        }
    }
}

TEST_CASE("R_{-4}(n) > 0 iff n is a sum of two squares") {
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        CHECK((representation_count(-4, n) > 0) == is_sum_of_two_squares(n));
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        Int count = 0;
        for (std::uint64_t a = 1; a <= n; ++a) {
            std::uint64_t x = a, y = n, t;
            while (y) t = x % y, x = y, y = t;
            if (x == 1) ++count;
        }
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("prime_power_bounds") {
    auto three_mod_four = [](std::uint64_t p) { return p % 4 == 3; };
    auto b20 = prime_power_bounds(20, three_mod_four);
    CHECK(b20.entries == std::map<std::uint64_t, unsigned>{{3, 2}, {7, 1}, {11, 1}, {19, 1}});
    auto b4 = prime_power_bounds(4, three_mod_four);
    CHECK(b4.entries == std::map<std::uint64_t, unsigned>{{3, 1}});
    auto b2 = prime_power_bounds(2, [](std::uint64_t) { return true; });
    CHECK(b2.entries == std::map<std::uint64_t, unsigned>{{2, 1}});
}

TEST_CASE("prime_power_bounds invariant: p^beta <= bound < p^(beta+1)") {
    auto all = prime_power_bounds(5'000, [](std::uint64_t) { return true; });
    for (const auto& [p, beta] : all.entries) {
        CHECK(pow_int(p, beta) <= 5'000);
        CHECK(pow_int(p, beta + 1) > 5'000);
    }
}
