#pragma once

#include "circ16/circulant.hpp"
#include "circ16/classifier.hpp"
#include "circ16/int_types.hpp"
#include "circ16/witness_plan.hpp"

#include <functional>
#include <optional>

namespace circ16 {

/// Quadruple v = (r, s, t, u) with quad_norm(v) = (r^2 - t^2 + 2su)^2 +
/// (s^2 - u^2 - 2rt)^2; the carrier of the 1-mod-8 witness construction.
struct QuadTuple {
    long r = 0, s = 0, t = 0, u = 0;
};

Int quad_norm(const QuadTuple& q);

/// Explicit witness families. Every constructor re-verifies its output
/// determinant before returning; constructions are certificates, not trusted
/// code paths.

/// det = m for odd m: with r = m mod 16 in {1,3,...,15} and c = (m-r)/16,
/// a_j = [j < r] + c. The all-ones polynomial kills every nontrivial root,
/// and gcd(r,16) = 1 makes the remaining product collapse to 1.
Vec16 odd_witness(const Int& m);

/// det = 256k via f = (x-1) - k Phi.
Vec16 mult256_witness(const Int& k);

/// The embedded det-128 constant, discovered by the bounded search oracle
/// over entry range [-2,2] (first hit in documented enumeration order).
const Vec16& base128_witness();

/// The three parametric families with closed-form determinants
///   lemma52_1: det = 32 {(8k+3)^2 + (8l+1)^2}
///   lemma52_2: det = 64 {(4k-1)^2 + 2 (4l-1)^2}^2
///   lemma52_3: det = 32 {(4k-1)^2 - (4m-2)^2 + 2(2l-1)4n}^2
///                  + 32 {(2l-1)^2 - (4n)^2 - 2(4k-1)(4m-2)}^2
Vec16 lemma52_1(const Int& k, const Int& l);
Vec16 lemma52_2(const Int& k, const Int& l);
Vec16 lemma52_3(const Int& k, const Int& l, const Int& m, const Int& n);

Int lemma52_1_value(const Int& k, const Int& l);
Int lemma52_2_value(const Int& k, const Int& l);
Int lemma52_3_value(const Int& k, const Int& l, const Int& m, const Int& n);

/// Witness plans for the three 64p / 64p^2 prime classes.
WitnessPlan witness_64p_5mod8(const Int& p);
WitnessPlan witness_64p2_3mod8(const Int& p);
WitnessPlan witness_64p_1mod8(const Int& p);

/// First tuple with quad_norm = p and r+t != s+u (mod 2), scanning shells of
/// increasing max(|r|,|s|,|t|,|u|) up to the bound, lexicographic in
/// (r, s, t, u) within a shell.
std::optional<QuadTuple> quad_search(const Int& p, long bound);

/// All tuples within the bound satisfying quad_norm = p and the parity
/// filter (pruned scan, order unspecified).
void for_each_quad_tuple(const Int& p, long bound,
                         const std::function<void(const QuadTuple&)>& visit);

/// Steps (ii)-(v) of the 1-mod-8 construction: rotate to the canonical
/// parity pattern r != s = t = u (mod 2), normalize to (t+s, t+u) = (2, 0)
/// (mod 4), and solve for (k, l, m, n). Returns nullopt when the mod-4
/// normalization is unreachable, which is exactly the class-PM1 situation.
std::optional<std::array<Int, 4>> normalize_quad(const QuadTuple& q);

/// Compose a plan for a member verdict:
///   Odd            -> OddFamily
///   DivisibleBy128 -> Mult256Family (v = 0 mod 256, incl. v = 0 as the
///                     all-zero vector) or Convolve(Base128, OddFamily)
///   64 Z_odd       -> qualifying-prime plan convolved with the odd cofactor
WitnessPlan plan_for(const MembershipVerdict& verdict);

/// Realize a plan, re-verifying det_bareiss == claimed_value at every node.
Vec16 realize(const WitnessPlan& plan);

/// plan_for + realize + final verification against the verdict's value.
Vec16 build_witness(const MembershipVerdict& verdict);

}  // namespace circ16
