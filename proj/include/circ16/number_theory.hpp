#pragma once

#include "circ16/int_types.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace circ16 {

/// Signed complete prime factorization: sign * prod p^e, primes strictly
/// increasing, every listed prime passes is_prime.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const {
        Int v = sign;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }
};

/// p = a^2 + b^2 with a odd, b even, both positive: the canonical
/// representative of the (essentially unique) two-squares decomposition of a
/// prime p = 1 mod 4.
struct TwoSquares {
    Int a, b;
};

/// p = a^2 + 2 b^2 with a, b odd and positive, for a prime p = 3 mod 8.
struct OnePlusTwoSquares {
    Int a, b;
};

/// Residue class of a + b mod 8 for p = a^2 + b^2 = 1 mod 8: {8m +- 1} or
/// {8m +- 3}. Because b = 0 mod 4 for such p, a+b = a-b mod 8 and the class
/// does not depend on the choice of representation.
enum class Mod8Class { PM1, PM3 };

struct FactorEffort {
    /// Total Pollard-rho iterations allowed across one factorization before
    /// FactorizationTimeout. The default covers desk-scale inputs (values up
    /// to ~2^128 whose second-largest prime factor is within rho range).
    std::uint64_t rho_iterations = 1ull << 26;
};

/// Deterministic for n < 2^64 (fixed Miller-Rabin witness set); 40
/// pseudo-random strong-probable-prime rounds above, derived from n so the
/// answer is reproducible.
bool is_prime(const Int& n);

/// Complete factorization of n != 0. Trial division below 10^6, then seeded
/// Brent-rho on the remaining cofactors; the result is re-multiplied and
/// checked before returning. Throws FactorizationTimeout when a composite
/// cofactor resists the effort budget.
Factorization factorize(const Int& n, std::uint64_t seed = 1, const FactorEffort& effort = {});

TwoSquares two_squares(const Int& p);
OnePlusTwoSquares one_plus_two_squares(const Int& p);
Mod8Class mod8_class(const Int& p);

/// Primes below the given bound, ascending (simple sieve; bound <= 10^6).
const std::vector<std::uint32_t>& small_primes();

}  // namespace circ16
