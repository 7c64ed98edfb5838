#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gaps {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an operation would exceed a configured effort bound
/// (factoring budget, sieve memory, big-integer size). Distinct from
/// logic errors: the caller may retry with a larger budget or fall
/// back to certificate-level checks.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// x mod m mapped to {0, ..., m-1}, m > 0.
inline Int mod_nonneg(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

/// x mod m mapped to {1, ..., m}: the paper-style representative range
/// where multiples of m map to m instead of 0.
inline Int mod_one_based(const Int& x, const Int& m) {
    Int r = mod_nonneg(x, m);
    return r == 0 ? m : r;
}

inline Int pow_int(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

} // namespace gaps
