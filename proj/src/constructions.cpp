#include "gaps/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

#include "gaps/arith.hpp"
#include "gaps/residue_sets.hpp"

namespace gaps::constructions {

namespace {

// Smallest prime = 3 (mod 4) dividing m to an odd power, with its
// exponent. m = 3 (mod 4) guarantees existence.
std::pair<std::uint64_t, unsigned> odd_power_3mod4_factor(std::uint64_t m) {
    std::uint64_t rest = m;
    for (std::uint64_t p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (p % 4 == 3 && (e & 1)) return {p, e};
    }
    if (rest > 1 && rest % 4 == 3) return {rest, 1};
    throw std::logic_error("no odd-power prime = 3 (mod 4) in " + std::to_string(m));
}

// All (p, e) with p dividing m to odd power e and kronecker(D, p) = -1.
std::vector<std::pair<std::uint64_t, unsigned>>
odd_power_nonresidue_factors(const Int& D, std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; p == 2 ? p = 3 : p += 2) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if ((e & 1) && arith::kronecker(D, Int(p)) == -1) out.emplace_back(p, e);
    }
    if (rest > 1 && arith::kronecker(D, Int(rest)) == -1) out.emplace_back(rest, 1);
    return out;
}

// Assemble P, the condition list, and y from per-prime congruences
// y = residue (mod p^(beta+1)). extra, if nonempty, is prepended to
// the CRT system (the 2^level | y condition of the improved kind).
void assemble_crt(GapCertificate& cert,
                  const std::vector<std::tuple<Int, unsigned, Int>>& prime_congruences,
                  const std::vector<std::pair<Int, Int>>& extra) {
    std::vector<std::pair<Int, Int>> system = extra;
    Int P = 1;
    for (const auto& [p, beta, residue] : prime_congruences) {
        Int pe = pow_int(p, beta + 1);
        P *= pe;
        system.emplace_back(residue, pe);
        cert.conditions.push_back({p, beta, residue});
    }
    for (const auto& [r, m] : extra) P *= m;
    cert.P = P;
    cert.y = arith::crt_solve(system);
}

} // namespace

GapCertificate richards_basic(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("richards_basic: k must be >= 1");
    GapCertificate cert;
    cert.kind = CertKind::basic;
    cert.k = k;

    auto ppb = arith::prime_power_bounds(4 * k, [](std::uint64_t p) { return p % 4 == 3; });
    std::vector<std::tuple<Int, unsigned, Int>> congruences;
    for (const auto& [p, beta] : ppb.entries) {
        Int pe = pow_int(Int(p), beta + 1);
        // 4y = -1 (mod p^(beta+1))
        Int residue = mod_nonneg(-arith::mod_inverse(4, pe), pe);
        congruences.emplace_back(Int(p), beta, residue);
    }
    assemble_crt(cert, congruences, {});

    for (std::uint64_t j = 1; j <= k; ++j) {
        auto [p, gamma] = odd_power_3mod4_factor(4 * j - 1);
        Witness w;
        w.j = j;
        w.kind = Witness::Kind::prime_power;
        w.p = p;
        w.gamma = gamma;
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

GapCertificate improved_two_squares(std::uint64_t k, unsigned level) {
    if (k < 1) throw std::invalid_argument("improved_two_squares: k must be >= 1");
    if (level < 5) throw std::invalid_argument("improved_two_squares: level must be >= 5");
    GapCertificate cert;
    cert.kind = CertKind::improved;
    cert.k = k;
    cert.level = level;

    const std::uint64_t bound = 4 * k;
    // exact finite thresholds; the asymptotic (1+eps) factor is not needed
    const std::uint64_t X = (bound + 12) / 13;
    const std::uint64_t Y = (bound + 8) / 9;
    const std::uint64_t Z = (bound + 4) / 5;

    auto abc = residue_sets::abc_sets(level);
    auto ppb = arith::prime_power_bounds(bound, [](std::uint64_t p) { return p % 4 == 3; });

    std::vector<std::tuple<Int, unsigned, Int>> congruences;
    for (const auto& [p, beta] : ppb.entries) {
        std::uint64_t cls = residue_sets::project(level + 2, Int(p));
        bool include;
        if (p <= X)
            include = true;
        else if (p <= Y)
            include = !abc.C.contains(cls);
        else if (p <= Z)
            include = !abc.B.contains(cls);
        else
            include = !abc.A.contains(cls);
        if (!include) continue;
        Int pe = pow_int(Int(p), beta + 1);
        Int residue = mod_nonneg(-arith::mod_inverse(4, pe), pe);
        congruences.emplace_back(Int(p), beta, residue);
    }
    std::vector<std::pair<Int, Int>> dyadic = {{Int(0), Int(1) << level}};
    assemble_crt(cert, congruences, dyadic);

    for (std::uint64_t j = 1; j <= k; ++j) {
        Witness w;
        w.j = j;
        std::uint64_t pl = residue_sets::project(level, Int(j));
        if (residue_sets::in_s_by_definition(level, pl)) {
            w.kind = Witness::Kind::dyadic;
            w.a = 0;
            w.b = pl;
            while (w.b % 2 == 0) {
                w.b >>= 1;
                ++w.a;
            }
        } else {
            // any prime = 3 (mod 4) with odd exponent in 4j-1 that made
            // it into the product; the case analysis guarantees one
            std::uint64_t m = 4 * j - 1;
            std::uint64_t rest = m;
            bool found = false;
            auto try_prime = [&](std::uint64_t p, unsigned e) {
                if (found || p % 4 != 3 || !(e & 1)) return;
                if (ppb.entries.count(p) &&
                    std::any_of(cert.conditions.begin(), cert.conditions.end(),
                                [&](const PrimeCondition& c) { return c.p == p; })) {
                    w.kind = Witness::Kind::prime_power;
                    w.p = p;
                    w.gamma = e;
                    found = true;
                }
            };
            for (std::uint64_t p = 3; p * p <= rest; p += 2) {
                if (rest % p != 0) continue;
                unsigned e = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++e;
                }
                try_prime(p, e);
            }
            if (rest > 1) try_prime(rest, 1);
            if (!found)
                throw std::logic_error("improved_two_squares: no covered witness prime for j=" +
                                       std::to_string(j));
        }
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

bool validate_fundamental_discriminant(const Int& D) {
    if (D == 0 || D == 1)
        throw std::invalid_argument("validate_fundamental_discriminant: D must not be 0 or 1");
    auto squarefree = [](const Int& n) {
        if (n == 1 || n == -1) return true;
        auto f = arith::factorize(abs(n));
        return std::all_of(f.factors.begin(), f.factors.end(),
                           [](const auto& pe) { return pe.second == 1; });
    };
    if (mod_nonneg(D, 4) == 1) return squarefree(D);
    if (mod_nonneg(D, 4) == 0) {
        Int q = D / 4;
        Int qm = mod_nonneg(q, 4);
        return (qm == 2 || qm == 3) && squarefree(q);
    }
    return false;
}

Int choose_r(const Int& D) {
    for (Int r = 1; r <= abs(D); ++r)
        if (arith::kronecker(D, r) == -1) return r;
    throw std::logic_error("choose_r: no r with (D/r) = -1 for D = " + D.str());
}

DiscriminantContext make_discriminant_context(const Int& D, std::uint64_t k) {
    if (!validate_fundamental_discriminant(D))
        throw std::invalid_argument("not a fundamental discriminant: " + D.str());
    DiscriminantContext ctx;
    ctx.D = D;
    ctx.r = choose_r(D);
    Int Dabs = abs(D);
    ctx.t = static_cast<std::uint64_t>(arith::euler_phi(Dabs));
    ctx.L = Dabs * (k + 1);

    auto dabs = static_cast<std::uint64_t>(Dabs);
    for (std::uint64_t l = 1; ctx.ell_seq.size() < ctx.t; ++l)
        if (std::gcd(l, dabs) == 1) ctx.ell_seq.push_back(l);

    std::vector<std::uint64_t> cumulative;
    auto r_val = static_cast<std::uint64_t>(ctx.r);
    for (std::uint64_t l : ctx.ell_seq) {
        // x with l*x = r (mod |D|)
        Int inv = arith::mod_inverse(Int(l), Dabs);
        cumulative.push_back(static_cast<std::uint64_t>(inv * r_val % Dabs));
        auto sorted = cumulative;
        std::sort(sorted.begin(), sorted.end());
        ctx.T_chain.push_back(std::move(sorted));
    }
    return ctx;
}

GapCertificate general_discriminant(const Int& D, std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("general_discriminant: k must be >= 1");
    DiscriminantContext ctx = make_discriminant_context(D, k);
    GapCertificate cert;
    cert.kind = CertKind::discriminant;
    cert.k = k;
    cert.D = D;
    cert.r = ctx.r;
    cert.t = static_cast<unsigned>(ctx.t);
    cert.L = ctx.L;

    auto L = static_cast<std::uint64_t>(ctx.L);
    auto dabs = static_cast<std::uint64_t>(abs(D));
    std::uint64_t ell_t = ctx.ell_seq.back();
    cert.band_coverage_proven = Int(L) * L >= Int(ell_t) * ell_t * ell_t;

    auto ppb = arith::prime_power_bounds(
        L, [&](std::uint64_t p) { return std::gcd(p, dabs) == 1; });

    std::vector<std::tuple<Int, unsigned, Int>> congruences;
    for (const auto& [p, beta] : ppb.entries) {
        bool include;
        if (p * ell_t <= L) {
            include = true;
        } else {
            // band index i with L/l_{i+1} < p <= L/l_i
            include = false;
            for (std::size_t i = 0; i + 1 < ctx.ell_seq.size(); ++i) {
                if (p * ctx.ell_seq[i] <= L && p * ctx.ell_seq[i + 1] > L) {
                    const auto& Ti = ctx.T_chain[i];
                    include = std::binary_search(Ti.begin(), Ti.end(), p % dabs);
                    break;
                }
            }
        }
        if (!include) continue;
        Int pe = pow_int(Int(p), beta + 1);
        // |D|y = r (mod p^(beta+1))
        Int residue = ctx.r * arith::mod_inverse(Int(dabs), pe) % pe;
        congruences.emplace_back(Int(p), beta, residue);
    }
    assemble_crt(cert, congruences, {});

    Int g = boost::integer::gcd(abs(D), cert.P);
    if (g != 1)
        throw std::logic_error("general_discriminant: gcd(D, P) = " + g.str());

    for (std::uint64_t j = 1; j <= k; ++j) {
        std::uint64_t m = dabs * j + static_cast<std::uint64_t>(ctx.r);
        auto candidates = odd_power_nonresidue_factors(D, m);
        if (candidates.empty())
            throw std::logic_error("general_discriminant: no witness prime for j=" +
                                   std::to_string(j));
        Witness w;
        w.j = j;
        w.kind = Witness::Kind::prime_power;
        // prefer a prime actually covered by the product
        auto covered = std::find_if(candidates.begin(), candidates.end(), [&](const auto& pe) {
            return std::any_of(cert.conditions.begin(), cert.conditions.end(),
                               [&](const PrimeCondition& c) { return c.p == pe.first; });
        });
        const auto& [p, gamma] = covered != candidates.end() ? *covered : candidates.front();
        w.p = p;
        w.gamma = gamma;
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

GapCertificate sparse_powers(std::uint64_t k, std::uint64_t d) {
    if (k < 1 || d < 1) throw std::invalid_argument("sparse_powers: k, d must be >= 1");
    GapCertificate cert;
    cert.kind = CertKind::sparse;
    cert.k = k;
    cert.d = d;
    cert.twos_exponent = 0;
    std::uint64_t d_prime = d;
    while (d_prime % 2 == 0) {
        d_prime >>= 1;
        ++cert.twos_exponent;
    }
    cert.d_prime = d_prime;

    const std::uint64_t bound = 4 * k * d_prime;
    // primes dividing d' are excluded: (4d')^d must be invertible mod P,
    // and no witness prime can divide 4d'j - 1 anyway
    auto ppb = arith::prime_power_bounds(
        bound, [&](std::uint64_t p) { return p % 4 == 3 && d_prime % p != 0; });

    Int base = pow_int(Int(4 * d_prime), static_cast<unsigned>(d));
    std::vector<std::tuple<Int, unsigned, Int>> congruences;
    for (const auto& [p, beta] : ppb.entries) {
        Int pe = pow_int(Int(p), beta + 1);
        // (4d')^d y = -1 (mod p^(beta+1))
        Int residue = mod_nonneg(-arith::mod_inverse(base % pe, pe), pe);
        congruences.emplace_back(Int(p), beta, residue);
    }
    assemble_crt(cert, congruences, {});

    for (std::uint64_t j = 1; j <= k; ++j) {
        auto [p, gamma] = odd_power_3mod4_factor(4 * d_prime * j - 1);
        Witness w;
        w.j = j;
        w.kind = Witness::Kind::prime_power;
        w.p = p;
        w.gamma = gamma;
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

bool gcd_lemma_check(std::uint64_t d_prime, unsigned twos_exponent, std::uint64_t j) {
    if (d_prime % 2 == 0 || d_prime < 1 || j < 1)
        throw std::invalid_argument("gcd_lemma_check: d_prime must be odd, j >= 1");
    std::uint64_t d = d_prime << twos_exponent;
    Int a = Int(4) * d_prime * j;
    // bit-size budget for a^d
    if (d * msb(a) > 10'000'000)
        throw ResourceError("gcd_lemma_check: (4d'j)^d exceeds big-integer budget");
    Int numerator = (pow_int(a, static_cast<unsigned>(d)) - 1) / (a - 1);
    return boost::integer::gcd(numerator, a - 1) == 1;
}

} // namespace gaps::constructions
