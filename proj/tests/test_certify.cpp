#include "doctest.h"

#include <random>

#include "gaps/arith.hpp"
#include "gaps/certify.hpp"
#include "gaps/constructions.hpp"

using namespace gaps;
using namespace gaps::certify;
using namespace gaps::constructions;

TEST_CASE("valid certificates verify") {
    CHECK(verify_certificate(richards_basic(1)).ok);
    CHECK(verify_certificate(richards_basic(40)).ok);
    CHECK(verify_certificate(improved_two_squares(40, 5)).ok);
    CHECK(verify_certificate(improved_two_squares(40, 7)).ok);
    CHECK(verify_certificate(general_discriminant(-4, 10)).ok);
    CHECK(verify_certificate(general_discriminant(5, 10)).ok);
    CHECK(verify_certificate(sparse_powers(2, 2)).ok);
    CHECK(verify_certificate(sparse_powers(10, 6)).ok);
}

TEST_CASE("tampered y is rejected") {
    auto c = richards_basic(3);
    c.y += 1;
    auto report = verify_certificate(c);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.failures.empty());
}

TEST_CASE("tampered witness is rejected with failure at the right index") {
    auto c = richards_basic(2);
    c.witnesses[0].gamma += 2; // p^(gamma+2) cannot exactly divide y+1
    auto report = verify_certificate(c);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.per_index[0].passed);
    CHECK(report.per_index[1].passed);
}

TEST_CASE("missing witness coverage is rejected") {
    auto c = richards_basic(3);
    c.witnesses.pop_back();
    CHECK_FALSE(verify_certificate(c).ok);
}

TEST_CASE("verification never factors") {
    auto c = improved_two_squares(120, 6);
    auto before = arith::factorize_call_count();
    CHECK(verify_certificate(c).ok);
    CHECK(arith::factorize_call_count() == before);
}

TEST_CASE("full_verify checks small windows with the oracle") {
    auto r2 = full_verify(richards_basic(2));
    CHECK(r2.ok);
    CHECK(r2.checked == 2);
    CHECK(r2.skipped == 0);

    auto rd = full_verify(general_discriminant(-4, 1));
    CHECK(rd.ok);
    CHECK(rd.checked == 1);

    auto rs = full_verify(sparse_powers(2, 2));
    CHECK(rs.ok);
    CHECK(rs.skipped == 0);
}

TEST_CASE("full_verify skips oversized windows without failing") {
    auto report = full_verify(richards_basic(40));
    CHECK(report.ok);
    CHECK(report.skipped == 40);
    CHECK(report.checked == 0);
}

TEST_CASE("mutation fuzzing: semantic corruptions are always rejected") {
    std::mt19937_64 rng(42);
    std::vector<GapCertificate> pool = {
        richards_basic(12),  improved_two_squares(12, 5), general_discriminant(-4, 8),
        general_discriminant(5, 8), sparse_powers(8, 2),
    };
    int rejected = 0, total = 0;
    while (total < 200) {
        GapCertificate c = pool[rng() % pool.size()];
        std::size_t wi = rng() % c.witnesses.size();
        Witness& w = c.witnesses[wi];
        switch (rng() % 4) {
            case 0:
                if (w.kind != Witness::Kind::prime_power) continue;
                w.gamma += 2;
                break;
            case 1: {
                if (w.kind != Witness::Kind::prime_power) continue;
                // swap in a different prime that does not divide the target;
                // stepping by 4 keeps the residue class but never leaves 2
                if (w.p == 2) continue;
                Int target = c.target(w.j);
                Int p = w.p;
                do { p += 4; } while (!arith::is_prime(p) || target % p == 0);
                w.p = p;
                break;
            }
            case 2:
                c.y += 1;
                break;
            case 3: {
                std::size_t other = rng() % c.witnesses.size();
                if (other == wi) continue;
                // swapping j between witnesses that agree elsewhere only
                // permutes the list, which is still valid
                Witness a = c.witnesses[wi], b = c.witnesses[other];
                a.j = b.j = 0;
                if (a == b) continue;
                std::swap(c.witnesses[wi].j, c.witnesses[other].j);
                break;
            }
        }
        ++total;
        if (!verify_certificate(c).ok) ++rejected;
    }
    CHECK(rejected == total);
}
