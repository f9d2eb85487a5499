#pragma once

#include "circ16/int_types.hpp"
#include "circ16/number_theory.hpp"
#include "circ16/witness_plan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circ16 {

enum class ReasonKind {
    // member reasons
    Odd,
    DivisibleBy128,
    Prime5Mod8,
    Prime3Mod8Squared,
    Prime1Mod8ClassPM3,
    // non-member reasons
    EvenNotDivisibleBy64,
    Thm41Shape,
};

const char* reason_name(ReasonKind k);

/// One prime of a non-member decomposition 64k = 64 * prod p_i^{k_i} * prod q_j:
/// every p = 1 (mod 8) is of class PM1, every q = 3 (mod 8) has exponent
/// exactly one, and primes = 7 (mod 8) are unrestricted.
struct DecompositionEntry {
    Int prime;
    unsigned exponent = 1;
    unsigned residue_mod8 = 0;
    std::optional<Mod8Class> klass;  // present iff residue_mod8 == 1
};

/// Membership decision with a machine-checkable certificate: member reasons
/// carry the qualifying prime, non-member reasons carry either the
/// divisibility failure or the full obstructing decomposition.
struct MembershipVerdict {
    Int value;
    bool member = false;
    ReasonKind reason = ReasonKind::Odd;
    std::optional<Int> reason_prime;               // qualifying prime, members only
    std::vector<DecompositionEntry> decomposition; // Thm41Shape only
    std::optional<WitnessPlan> plan;               // attached by the witness builder
};

/// Decide membership of v in the order-16 circulant determinant spectrum.
///   (a) v odd                         -> member (Odd)
///   (b) v = 0 (mod 128)               -> member (DivisibleBy128); v = 0 here
///   (c) v even, v != 0 (mod 64)       -> non-member (EvenNotDivisibleBy64)
///   (d) v = 64k, k odd: member iff |k| has a prime factor p = 5 (mod 8), or
///       a factor q = 3 (mod 8) with q^2 | k, or a factor p = 1 (mod 8) of
///       class PM3; otherwise non-member with the full decomposition.
/// Qualifying-prime priority: 5 (mod 8) first, then 3 (mod 8) squared, then
/// 1 (mod 8) PM3; smallest prime within a class. Signs are immaterial: every
/// membership class is closed under negation, so |k| decides.
/// Throws IndeterminateFactorization when factorization times out.
MembershipVerdict classify(const Int& v, std::uint64_t seed = 1, const FactorEffort& effort = {});

/// Independently re-verify the verdict's arithmetic claim (residues, class,
/// divisibility, decomposition shape). Throws InternalInvariantViolation on
/// any mismatch.
void verify_verdict(const MembershipVerdict& verdict);

}  // namespace circ16
